"""Cell analysis over the diagram basis.

The arc-count invariant a(w) (number of top short edges of the diagram,
equivalently the largest commuting block occurring as a contiguous factor
of some reduced word) governs the two-sided cell structure.  Descents that
can be cancelled by an adjacent generator are repeatedly removed to reach
a *core* element: either a product of pairwise non-adjacent generators, or
(for even n) an alternating product of the two maximal commuting sets.
Core classification yields the two-sided label; the bottom and top arc
patterns of the diagram refine it to left and right cells.  Involutions
decompose canonically as x * (commuting block) * x^-1, and each right cell
outside the non-square alternating family contains exactly one involution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .config import GroupConfig
from .diagrams import TOP, edge_list, generator, multiply
from .straightening import stack, straighten
from .words import (
    Word,
    check_word,
    commutation_class,
    greedy_back,
    greedy_front,
    left_descents,
    perm_of,
    right_descents,
    right_groups,
    support,
)

M_NONSQUARE = "M-nonsquare cell"


@dataclass(frozen=True)
class TwoSidedLabel:
    """Label of a two-sided cell: either Small(k) for the class of all
    size-k commuting blocks (k below half the rank), or an alternating
    label (start parity, factor count) for even n."""
    kind: str  # "small" | "alternating"
    size: int = 0
    start: str = ""  # "odd" | "even"
    factors: int = 0

    @classmethod
    def small(cls, k: int) -> TwoSidedLabel:
        return cls("small", size=k)

    @classmethod
    def alternating(cls, start: str, factors: int) -> TwoSidedLabel:
        if start not in ("odd", "even") or factors < 1:
            raise ValueError("bad alternating label")
        return cls("alternating", start=start, factors=factors)

    def sort_key(self):
        if self.kind == "small":
            return (0, self.size, 0, "")
        return (1, self.factors, 1, self.start)

    def __str__(self) -> str:
        if self.kind == "small":
            return f"Small({self.size})"
        return f"Alt({self.start},{self.factors})"

    def to_json(self) -> dict:
        if self.kind == "small":
            return {"kind": "small", "k": self.size}
        return {"kind": "alternating", "start": self.start, "factors": self.factors}

    @classmethod
    def from_json(cls, obj: dict) -> TwoSidedLabel:
        if obj["kind"] == "small":
            return cls.small(int(obj["k"]))
        return cls.alternating(obj["start"], int(obj["factors"]))


@dataclass(frozen=True)
class CellLabels:
    two_sided: TwoSidedLabel
    left_pattern: frozenset[tuple[int, int]]  # bottom short arcs
    right_pattern: frozenset[tuple[int, int]]  # top short arcs
    loops: int

    @property
    def a(self) -> int:
        return len(self.right_pattern)

    def to_json(self) -> dict:
        return {
            "two_sided": self.two_sided.to_json(),
            "left_pattern": sorted(self.left_pattern),
            "right_pattern": sorted(self.right_pattern),
            "loops": self.loops,
            "a": self.a,
        }


@dataclass(frozen=True)
class CancelStep:
    side: str
    s: int
    t: int


@dataclass(frozen=True)
class ReduceResult:
    word: Word
    trace: tuple[CancelStep, ...]


@dataclass(frozen=True)
class InvolutionDecomposition:
    x: Word
    core: frozenset[int]


@dataclass(frozen=True)
class CensusRow:
    two_sided: TwoSidedLabel
    left_cells: int
    right_cells: int
    elements_seen: int

    def to_json(self) -> dict:
        return {
            "two_sided": self.two_sided.to_json(),
            "left_cells": self.left_cells,
            "right_cells": self.right_cells,
            "elements_seen": self.elements_seen,
        }


def _require_reduced_fc(cfg: GroupConfig, word) -> Word:
    from .algebra import is_reduced_word

    word = check_word(cfg, word)
    if not is_reduced_word(cfg, word):
        raise ValueError("word is not a reduced word of a fully commutative element")
    return word


def a_value(cfg: GroupConfig, word) -> int:
    """Number of top short-arc orbits of the word's diagram."""
    d = stack(cfg, word).diagram
    return sum(1 for side, _ in d.top if side == TOP) // 2


def a_bruteforce(cfg: GroupConfig, word, bound: int = 12, subword: bool = False) -> int:
    """Largest commuting block appearing as a contiguous factor of some
    word in the commutation class (the definition, by exhaustion).

    With subword=True the alternative subsequence reading is used instead:
    the largest commuting subset of the support.
    """
    word = check_word(cfg, word)
    if len(word) > bound:
        raise ValueError(f"word length {len(word)} exceeds bound {bound}")
    if subword:
        supp = support(word)
        return max(len(u) for u in cfg.commuting_sets() if u <= supp)
    best = 0
    for u in commutation_class(cfg, word):
        for a in range(len(u)):
            block: set[int] = set()
            for b in range(a, len(u)):
                x = u[b]
                if x in block or any(cfg.adjacent(x, y) for y in block):
                    break
                block.add(x)
            best = max(best, len(block))
    return best


def cancellable(cfg: GroupConfig, word, s: int, side: str) -> int | None:
    """The adjacent generator t absorbing the descent s, if any: stacking
    t's diagram against the element equals the element with s removed."""
    word = tuple(word)
    full = stack(cfg, word).diagram
    if side == "left":
        moved = greedy_front(cfg, word, s)
        if moved is None:
            raise ValueError(f"{s} is not a left descent")
        target = stack(cfg, moved[1:]).diagram
        for t in cfg.neighbours_of(s):
            r = multiply(generator(cfg.n, t), full)
            if r.contractible == 0 and r.diagram == target:
                return t
        return None
    if side == "right":
        moved = greedy_back(cfg, word, s)
        if moved is None:
            raise ValueError(f"{s} is not a right descent")
        target = stack(cfg, moved[:-1]).diagram
        for t in cfg.neighbours_of(s):
            r = multiply(full, generator(cfg.n, t))
            if r.contractible == 0 and r.diagram == target:
                return t
        return None
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _cancel_options(cfg: GroupConfig, word) -> list[CancelStep]:
    out = []
    for s in sorted(left_descents(cfg, word)):
        t = cancellable(cfg, word, s, "left")
        if t is not None:
            out.append(CancelStep("left", s, t))
    for s in sorted(right_descents(cfg, word)):
        t = cancellable(cfg, word, s, "right")
        if t is not None:
            out.append(CancelStep("right", s, t))
    return out


def _apply_cancel(cfg: GroupConfig, word: Word, step: CancelStep) -> Word:
    if step.side == "left":
        return greedy_front(cfg, word, step.s)[1:]
    return greedy_back(cfg, word, step.s)[:-1]


def reduce_to_core(cfg: GroupConfig, word, rng: random.Random | None = None) -> ReduceResult:
    """Cancel descents until none is cancellable.  Deterministic order
    (left side first, smallest descent) unless an RNG is supplied."""
    w = _require_reduced_fc(cfg, word)
    trace: list[CancelStep] = []
    while True:
        options = _cancel_options(cfg, w)
        if not options:
            return ReduceResult(w, tuple(trace))
        step = options[0] if rng is None else rng.choice(options)
        w = _apply_cancel(cfg, w, step)
        trace.append(step)


def is_core(cfg: GroupConfig, word) -> bool:
    """No descent on either side is cancellable."""
    w = _require_reduced_fc(cfg, word)
    return not _cancel_options(cfg, w)


def alternating_word(cfg: GroupConfig, start: str, factors: int) -> Word:
    """Reduced word of the alternating product of the two maximal
    commuting sets, beginning with the given parity."""
    odd, even = cfg.alternating_sets()
    first, second = (odd, even) if start == "odd" else (even, odd)
    out: list[int] = []
    for i in range(factors):
        out.extend(sorted(first if i % 2 == 0 else second))
    return tuple(out)


def classify_core(cfg: GroupConfig, word) -> TwoSidedLabel:
    """Two-sided label of a core element: the block structure of its left
    decomposition is a single commuting set, or an alternation of the two
    maximal ones."""
    from .words import left_decomposition

    groups = left_decomposition(cfg, word).groups
    if not groups:
        return TwoSidedLabel.small(0)
    if len(groups) == 1:
        t = groups[0]
        if 2 * len(t) < cfg.n:
            return TwoSidedLabel.small(len(t))
        odd, even = cfg.alternating_sets()
        if t == odd:
            return TwoSidedLabel.alternating("odd", 1)
        if t == even:
            return TwoSidedLabel.alternating("even", 1)
        raise ValueError("not a core element")
    if cfg.n % 2:
        raise ValueError("not a core element")
    odd, even = cfg.alternating_sets()
    for g1, g2 in zip(groups, groups[1:]):
        if {g1, g2} != {odd, even}:
            raise ValueError("not a core element")
    start = "odd" if groups[0] == odd else "even"
    return TwoSidedLabel.alternating(start, len(groups))


def core_neighbours(cfg: GroupConfig, word) -> frozenset[tuple[int, Word]]:
    """All pairs (s, q') of core elements q' with E_q = E_s E_q' E_s,
    found by exhaustive engine search over candidate cores."""
    w = _require_reduced_fc(cfg, word)
    if not is_core(cfg, w):
        raise ValueError("not a core element")
    n = cfg.n
    target = stack(cfg, w).diagram
    bound = len(w) + 2
    cands: list[Word] = [tuple(sorted(t)) for t in cfg.commuting_sets()]
    if n % 2 == 0:
        max_factors = (2 * bound) // n
        for start in ("odd", "even"):
            for f in range(2, max_factors + 1):
                cands.append(alternating_word(cfg, start, f))
    out = set()
    for s in cfg.generators():
        g = generator(n, s)
        for cw in cands:
            r1 = multiply(g, stack(cfg, cw).diagram)
            if r1.contractible:
                continue
            r2 = multiply(r1.diagram, g)
            if r2.contractible == 0 and r2.diagram == target:
                out.add((s, cw))
    return frozenset(out)


def labels(cfg: GroupConfig, word) -> CellLabels:
    """Cell labels of an element: elements share a left cell iff the
    two-sided label and the bottom arc pattern agree, a right cell iff the
    label and the top pattern agree, a two-sided cell iff the label agrees."""
    w = _require_reduced_fc(cfg, word)
    d = stack(cfg, w).diagram
    core = reduce_to_core(cfg, w).word
    top_arcs, bottom_arcs, _ = edge_list(d)
    return CellLabels(
        two_sided=classify_core(cfg, core),
        left_pattern=frozenset(bottom_arcs),
        right_pattern=frozenset(top_arcs),
        loops=d.loops,
    )


def involution_decompose(
    cfg: GroupConfig, word, rng: random.Random | None = None
) -> InvolutionDecomposition:
    """Canonical decomposition x * (commuting block) * x^-1 of an
    involution, by repeatedly conjugating away a length-reducing left
    descent (smallest by default)."""
    w = _require_reduced_fc(cfg, word)
    p = perm_of(cfg, w)
    if not p.is_involution():
        raise ValueError("element is not an involution")
    x: list[int] = []
    while True:
        supp = sorted(support(w))
        if all(not cfg.adjacent(a, b) for a in supp for b in supp if a < b):
            break
        options = []
        for s in sorted(left_descents(cfg, w)):
            rest = greedy_front(cfg, w, s)[1:]
            back = greedy_back(cfg, rest, s)
            if back is not None:
                options.append((s, back[:-1]))
        if not options:
            raise AssertionError("involution with entangled support but no conjugating descent")
        s, w = options[0] if rng is None else rng.choice(options)
        x.append(s)
    core = support(w)
    assert len(w) == len(core), "terminal element is not a commuting block"
    full = tuple(x) + tuple(sorted(core)) + tuple(reversed(x))
    assert perm_of(cfg, full).length() == len(full), "decomposition is not reduced"
    assert perm_of(cfg, full) == p, "decomposition does not multiply back"
    return InvolutionDecomposition(tuple(x), core)


def right_cell_involution(cfg: GroupConfig, word) -> Word | str:
    """The canonical involution sharing the element's right cell, or the
    M_NONSQUARE marker for the alternating cells without involutions."""
    w = _require_reduced_fc(cfg, word)
    while True:
        for s in sorted(right_descents(cfg, w)):
            if cancellable(cfg, w, s, "right") is not None:
                w = greedy_back(cfg, w, s)[:-1]
                break
        else:
            break
    groups = right_groups(cfg, w)
    half = cfg.n // 2
    if groups and cfg.n % 2 == 0 and len(groups[-1]) == half:
        j = len(groups)
        while j > 0 and len(groups[j - 1]) == half:
            j -= 1
        if (len(groups) - j) % 2 == 0:
            return M_NONSQUARE
        head, tail = groups[:j], groups[j:]
    else:
        head, tail = groups[:-1], groups[-1:]
    y = tuple(s for g in head for s in sorted(g))
    q = tuple(s for g in tail for s in sorted(g))
    d = y + q + tuple(reversed(y))
    p = perm_of(cfg, d)
    assert p.length() == len(d), "involution candidate is not reduced"
    assert p.is_involution()
    return straighten(stack(cfg, d).diagram).letters


def census(cfg: GroupConfig, max_len: int, cap: int | None = None) -> list[CensusRow]:
    """Enumerate all elements up to the length horizon and count, per
    two-sided label, the distinct left and right cell labels observed."""
    from .explore import enumerate_elements

    agg: dict[TwoSidedLabel, list] = {}
    for rec in enumerate_elements(cfg, max_len, with_labels=True, cap=cap):
        lab = rec.labels
        entry = agg.setdefault(lab.two_sided, [set(), set(), 0])
        entry[0].add(lab.left_pattern)
        entry[1].add(lab.right_pattern)
        entry[2] += 1
    rows = [
        CensusRow(label, len(v[0]), len(v[1]), v[2])
        for label, v in agg.items()
    ]
    rows.sort(key=lambda r: r.two_sided.sort_key())
    return rows
