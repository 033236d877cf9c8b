"""Conversion between words and admissible diagrams.

`stack` evaluates a word as a product of generator diagrams.  The reverse
direction peels one generator at a time off a non-straight admissible
diagram: a minimal arc that is covered by another arc (or coexists with a
winding loop) splits off on its own row, and otherwise a slanted strand
next to a minimal arc is shortened by multiplying with a generator.  The
four peel kinds are tried in the fixed priority T1 > B1 > T2 > B2, with
the smallest qualifying class as tie-break, which makes the produced word
canonical.  Every peel re-stacks the emitted letter and asserts that the
original diagram is recovered with no contractible loop.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .config import GroupConfig
from .diagrams import (
    TOP,
    BOT,
    AffineDiagram,
    ProductResult,
    class_of,
    descent_arcs,
    edge_list,
    generator,
    identity,
    is_admissible,
    length,
    multiply,
    partner,
    short_arc_count,
    straight_diagram,
    _set_entry,
)


@dataclass(frozen=True)
class CongruenceFinding:
    cls: int
    kind: str  # "T1" | "B1" | "T2" | "B2"
    cover: tuple[int, int] | None  # innermost covering arc lift (T1/B1 case a)
    uses_loop: bool = False  # T1/B1 case b


@dataclass(frozen=True)
class PeelStep:
    letter: int
    end: str  # "left" | "right"
    rest: AffineDiagram


@dataclass(frozen=True)
class StraightWord:
    letters: tuple[int, ...]
    core: frozenset[int]


def stack(cfg: GroupConfig, word) -> ProductResult:
    """Left-to-right product of generator diagrams (first letter on top)."""
    word = tuple(word)
    for s in word:
        cfg.check_generator(s)
    return _stack_cached(cfg.n, word)


@lru_cache(maxsize=1 << 18)
def _stack_cached(n: int, word: tuple[int, ...]) -> ProductResult:
    if not word:
        return ProductResult(identity(n), 0)
    prev = _stack_cached(n, word[:-1])
    r = multiply(prev.diagram, generator(n, word[-1]))
    return ProductResult(r.diagram, prev.contractible + r.contractible)


def is_straight(d: AffineDiagram) -> frozenset[int] | None:
    """The commuting generator set S when d is the diagram of a product of
    pairwise non-adjacent generators (empty set for the identity); None
    otherwise."""
    if d.loops:
        return None
    s = descent_arcs(d, TOP)
    try:
        candidate = straight_diagram(d.n, s)
    except ValueError:
        return None
    return s if d == candidate else None


def _innermost_cover(n: int, arcs, k: int) -> tuple[int, int] | None:
    """Among arc lifts strictly covering positions (k, k+1), the one with
    the largest left endpoint; None if no arc covers."""
    best = None
    for p, q in arcs:
        reach = (q - p) // n + 2
        for m in range(-reach, reach + 1):
            lo, hi = p + m * n, q + m * n
            if lo < k and hi > k + 1:
                if best is None or lo > best[0]:
                    best = (lo, hi)
    return best


def congruence_candidates(d: AffineDiagram) -> dict[str, dict[int, tuple | None]]:
    """All classes qualifying for each peel kind.

    T1/B1 values are the innermost covering arc lift (None for the loop
    sub-case); T2/B2 values are the position k of the minimal arc (k, k+1)
    sitting right of the slanted strand.
    """
    n = d.n
    out: dict[str, dict[int, tuple | None]] = {"T1": {}, "B1": {}, "T2": {}, "B2": {}}
    top_arcs, bottom_arcs, _ = edge_list(d)
    top_minimal = sorted(descent_arcs(d, TOP))
    bottom_minimal = sorted(descent_arcs(d, BOT))
    for k in top_minimal:
        cover = _innermost_cover(n, top_arcs, k)
        if cover is not None:
            out["T1"][k] = cover
        elif d.loops:
            out["T1"][k] = None
    for k in bottom_minimal:
        cover = _innermost_cover(n, bottom_arcs, k)
        if cover is not None:
            out["B1"][k] = cover
        elif d.loops:
            out["B1"][k] = None
    # A strand entering at the node left of a minimal arc and exiting past
    # the arc's far end marks the arc as slideable (kinds T2 / B2).
    for k in top_minimal:
        side, j = partner(d, TOP, k - 1)
        if side == BOT and j >= k + 1:
            out["T2"][class_of(n, k - 1)] = (k,)
    for k in bottom_minimal:
        side, j = partner(d, BOT, k - 1)
        if side == TOP and j >= k + 1:
            out["B2"][class_of(n, k - 1)] = (k,)
    return out


def find_distinguished(d: AffineDiagram) -> CongruenceFinding:
    """Highest-priority peelable class of an admissible non-straight diagram."""
    if not is_admissible(d):
        raise ValueError("diagram is not admissible")
    if is_straight(d) is not None:
        raise ValueError("diagram is straight; nothing to peel")
    cands = congruence_candidates(d)
    for kind in ("T1", "B1", "T2", "B2"):
        if cands[kind]:
            cls = min(cands[kind])
            info = cands[kind][cls]
            if kind in ("T1", "B1"):
                return CongruenceFinding(cls, kind, info, uses_loop=info is None)
            return CongruenceFinding(cls, kind, None)
    raise AssertionError("no peelable class found on a non-straight admissible diagram")


def _arc_surgery(d: AffineDiagram, side: str, remove_add) -> AffineDiagram:
    entries = list(d.top if side == TOP else d.bottom)
    for p, q in remove_add:
        _set_entry(d.n, entries, p, (side, q))
        _set_entry(d.n, entries, q, (side, p))
    if side == TOP:
        return replace(d, top=tuple(entries))
    return replace(d, bottom=tuple(entries))


def peel(d: AffineDiagram, f: CongruenceFinding) -> PeelStep:
    """Split one generator off d at the distinguished class.

    The removed letter stacks back (on the reported end) to reproduce d
    exactly, the length drops by one, and the number of short horizontal
    edges is preserved; all three facts are asserted.
    """
    n = d.n
    if f.kind in ("T1", "B1"):
        side = TOP if f.kind == "T1" else BOT
        k = f.cls
        if f.cover is not None:
            i0, j0 = f.cover
            rest = _arc_surgery(d, side, [(i0, k), (k + 1, j0)])
        else:
            assert d.loops > 0
            rest = _arc_surgery(d, side, [(k + 1, k + n)])
            rest = replace(rest, loops=d.loops - 1)
        letter = k
        end = "left" if f.kind == "T1" else "right"
    elif f.kind == "T2":
        r = multiply(generator(n, f.cls), d)
        assert r.contractible == 0, "slide peel created a contractible loop"
        rest = r.diagram
        letter = class_of(n, f.cls + 1)
        end = "left"
    elif f.kind == "B2":
        r = multiply(d, generator(n, f.cls))
        assert r.contractible == 0, "slide peel created a contractible loop"
        rest = r.diagram
        letter = class_of(n, f.cls + 1)
        end = "right"
    else:
        raise ValueError(f"unknown peel kind {f.kind!r}")

    if end == "left":
        back = multiply(generator(n, letter), rest)
    else:
        back = multiply(rest, generator(n, letter))
    assert back.contractible == 0 and back.diagram == d, \
        f"peel reconstruction failed at class {f.cls} kind {f.kind}"
    assert length(rest) == length(d) - 1, "peel did not drop length by one"
    assert short_arc_count(rest) == short_arc_count(d), \
        "peel changed the short-edge count"
    return PeelStep(letter, end, rest)


@lru_cache(maxsize=1 << 16)
def straighten(d: AffineDiagram) -> StraightWord:
    """Canonical reduced word evaluating to d: peel until straight, then
    emit the commuting core in increasing class order."""
    if not is_admissible(d):
        raise ValueError("only admissible diagrams straighten")
    left: list[int] = []
    right: list[int] = []
    cur = d
    while (core := is_straight(cur)) is None:
        step = peel(cur, find_distinguished(cur))
        if step.end == "left":
            left.append(step.letter)
        else:
            right.append(step.letter)
        cur = step.rest
    word = tuple(left) + tuple(sorted(core)) + tuple(reversed(right))
    check = _stack_cached(d.n, word)
    assert check.contractible == 0 and check.diagram == d, "straightened word does not re-stack"
    assert len(word) == length(d)
    return StraightWord(word, core)
