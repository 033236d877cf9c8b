"""Exact arithmetic over the diagram basis.

Elements are finite linear combinations of admissible diagrams with
Laurent-polynomial coefficients.  A product of two basis diagrams is a
single basis diagram up to a power of delta = v + 1/v, so multiplication
is bilinear diagram stacking with delta bookkeeping.

`rewrite_mul` is an independent engine computing basis-times-generator
products purely at word level, using only the defining relations and the
factorization located by `braid_witness`; it never touches diagrams and
exists so the two engines can be played against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import GroupConfig
from .diagrams import AffineDiagram, canonical_key, identity, length, multiply
from .laurent import ONE, LaurentPoly, delta_power
from .straightening import stack, straighten
from .words import braid_witness, check_word, greedy_back, is_fc_reduced

Word = tuple[int, ...]


@dataclass(frozen=True)
class FcEval:
    """Normal form of a word: stack(word) = delta**exponent on the basis
    diagram, whose canonical straightened word is also reported."""
    exponent: int
    diagram: AffineDiagram
    word: Word


def fc_evaluate(cfg: GroupConfig, word) -> FcEval:
    r = stack(cfg, word)
    return FcEval(r.contractible, r.diagram, straighten(r.diagram).letters)


def is_reduced_word(cfg: GroupConfig, word) -> bool:
    """Diagram-engine test: the word is a reduced word of a fully
    commutative element iff no loop contracts and the length matches."""
    word = tuple(word)
    r = stack(cfg, word)
    return r.contractible == 0 and length(r.diagram) == len(word)


class AlgebraElement:
    """Finite map from basis diagrams to Laurent coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[AffineDiagram, LaurentPoly] | None = None):
        self.n = n
        clean: dict[AffineDiagram, LaurentPoly] = {}
        for d, coeff in (terms or {}).items():
            if d.n != n:
                raise ValueError("diagram size does not match the element")
            if coeff:
                clean[d] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> AlgebraElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> AlgebraElement:
        return cls(n, {identity(n): ONE})

    @classmethod
    def from_diagram(cls, d: AffineDiagram, coeff: LaurentPoly | int = 1) -> AlgebraElement:
        if isinstance(coeff, int):
            coeff = ONE * coeff
        return cls(d.n, {d: coeff})

    @classmethod
    def from_word(cls, cfg: GroupConfig, word) -> AlgebraElement:
        """The monomial of the word, including any contracted-loop scalars."""
        r = stack(cfg, word)
        return cls(cfg.n, {r.diagram: delta_power(r.contractible)})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("mismatched sizes")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, LaurentPoly()) + c
        return AlgebraElement(self.n, out)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + other.scale(-1)

    def scale(self, coeff: LaurentPoly | int) -> AlgebraElement:
        return AlgebraElement(self.n, {d: c * coeff for d, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for d, c in self.items_sorted():
            word = straighten(d).letters
            bits.append(f"({c})*E{list(word)}")
        return " + ".join(bits)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of diagram stacking."""
    if a.n != b.n:
        raise ValueError("mismatched sizes")
    out: dict[AffineDiagram, LaurentPoly] = {}
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            r = multiply(da, db)
            assert r.contractible >= 0
            coeff = ca * cb * delta_power(r.contractible)
            out[r.diagram] = out.get(r.diagram, LaurentPoly()) + coeff
    return AlgebraElement(a.n, out)


def rewrite_mul(cfg: GroupConfig, word, s: int) -> tuple[int, Word]:
    """E_word * E_s computed by word rewriting alone.

    Returns (delta exponent, reduced word of the product's basis element).
    The input must be a reduced word of a fully commutative element; the
    result is commutation-equivalent to the canonical word of the product.
    """
    word = check_word(cfg, word)
    cfg.check_generator(s)
    return _rewrite_mul_cached(cfg, word, s)


@lru_cache(maxsize=1 << 18)
def _rewrite_mul_cached(cfg: GroupConfig, word: Word, s: int) -> tuple[int, Word]:
    if greedy_back(cfg, word, s) is not None:
        # s is a right descent: the square relation contributes one delta
        return 1, word
    extended = word + (s,)
    if is_fc_reduced(cfg, extended):
        return 0, extended
    # appending s collapses: word = w1 + (s, t) + w2 with s commuting past
    # w2 and t adjacent to s, so the product contracts to w1 + (s,) + w2
    wit = braid_witness(cfg, word, s)
    exponent = 0
    cur = wit.w1 + (s,)
    for letter in wit.w2:
        e, cur = _rewrite_mul_cached(cfg, cur, letter)
        exponent += e
    return exponent, cur


def rewrite_eval(cfg: GroupConfig, letters, start=()) -> tuple[int, Word]:
    """Fold rewrite_mul over a generator sequence, starting from a reduced
    word (default: the identity)."""
    exponent = 0
    cur = check_word(cfg, start)
    for s in letters:
        e, cur = rewrite_mul(cfg, cur, s)
        exponent += e
    return exponent, cur


def element_to_json(a: AlgebraElement) -> dict:
    return {
        "n": a.n,
        "terms": [
            {"coeff": c.to_json(), "word": list(straighten(d).letters)}
            for d, c in a.items_sorted()
        ],
    }


def element_from_json(obj: dict) -> AlgebraElement:
    """Load an element; term words are re-evaluated, so non-canonical words
    fold their loop scalars into the coefficient."""
    try:
        n = int(obj["n"])
        raw = [(LaurentPoly.from_json(t["coeff"]), [int(x) for x in t["word"]])
               for t in obj["terms"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed element JSON: {exc}") from exc
    cfg = GroupConfig(n)
    out = AlgebraElement.zero(n)
    for coeff, word in raw:
        out = out + AlgebraElement.from_word(cfg, word).scale(coeff)
    return out
