"""Periodic planar matchings on two rows of nodes (cylinder diagrams).

An affine n-diagram matches the integer nodes of two infinite horizontal
rows so that the matching is invariant under shifting by n and no two
edges cross, together with a count of closed loops winding around the
cylinder (long horizontal edges; these coexist only with short horizontal
edges).  The window arrays store, for positions 1..n of each row, the
partner node as a (side, position) pair in the universal cover; every
other partner follows by periodicity.  Equality of diagrams is exact
equality of the window arrays and the loop count.

Multiplication stacks one diagram on top of another, identifies the middle
rows, and traces connectivity.  Middle cycles closing with zero offset
contract and are reported as an exponent of the loop scalar; cycles
closing with offset +-n wind the cylinder once and become long horizontal
edges of the product.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

TOP = "T"
BOT = "B"

NodeRef = tuple[str, int]


@dataclass(frozen=True)
class AffineDiagram:
    n: int
    top: tuple[NodeRef, ...]
    bottom: tuple[NodeRef, ...]
    loops: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        if len(self.top) != self.n or len(self.bottom) != self.n:
            raise ValueError("partner arrays must have n entries")
        if self.loops < 0:
            raise ValueError("negative loop count")
        for row in (self.top, self.bottom):
            for entry in row:
                side, pos = entry
                if side not in (TOP, BOT) or not isinstance(pos, int):
                    raise ValueError(f"malformed node reference {entry!r}")


@dataclass(frozen=True)
class ProductResult:
    diagram: AffineDiagram
    contractible: int


def class_of(n: int, pos: int) -> int:
    return (pos - 1) % n + 1


def partner(d: AffineDiagram, side: str, pos: int) -> NodeRef:
    """Partner of the node at an arbitrary cover position, by periodicity."""
    c = class_of(d.n, pos)
    row = d.top if side == TOP else d.bottom
    s2, p2 = row[c - 1]
    return (s2, p2 + (pos - c))


def _set_entry(n: int, entries: list[NodeRef], pos: int, target: NodeRef) -> None:
    # store the window representative of the partner of the node at `pos`
    c = class_of(n, pos)
    entries[c - 1] = (target[0], target[1] + (c - pos))


def identity(n: int) -> AffineDiagram:
    top = tuple((BOT, i) for i in range(1, n + 1))
    bottom = tuple((TOP, i) for i in range(1, n + 1))
    return AffineDiagram(n, top, bottom, 0)


def generator(n: int, i: int) -> AffineDiagram:
    """The diagram joining i and i+1 in both rows, all other classes vertical."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    top = [(BOT, j) for j in range(1, n + 1)]
    bottom = [(TOP, j) for j in range(1, n + 1)]
    _set_entry(n, top, i, (TOP, i + 1))
    _set_entry(n, top, i + 1, (TOP, i))
    _set_entry(n, bottom, i, (BOT, i + 1))
    _set_entry(n, bottom, i + 1, (BOT, i))
    return AffineDiagram(n, tuple(top), tuple(bottom), 0)


def straight_diagram(n: int, commuting: frozenset[int] | set[int]) -> AffineDiagram:
    """The diagram of a product of pairwise non-adjacent generators."""
    top = [(BOT, j) for j in range(1, n + 1)]
    bottom = [(TOP, j) for j in range(1, n + 1)]
    for i in sorted(commuting):
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        _set_entry(n, top, i, (TOP, i + 1))
        _set_entry(n, top, i + 1, (TOP, i))
        _set_entry(n, bottom, i, (BOT, i + 1))
        _set_entry(n, bottom, i + 1, (BOT, i))
    d = AffineDiagram(n, tuple(top), tuple(bottom), 0)
    if _involution_problems(d):
        raise ValueError("generators are not pairwise non-adjacent")
    return d


def edge_list(d: AffineDiagram):
    """One lift per edge orbit: (top arcs, bottom arcs, verticals).

    Arcs are (p, q) with p in 1..n and p < q; verticals are (top position
    in 1..n, bottom position).
    """
    top_arcs = []
    bottom_arcs = []
    verticals = []
    for i in range(1, d.n + 1):
        side, p = d.top[i - 1]
        if side == TOP:
            if p > i:
                top_arcs.append((i, p))
        else:
            verticals.append((i, p))
        side, p = d.bottom[i - 1]
        if side == BOT and p > i:
            bottom_arcs.append((i, p))
    return top_arcs, bottom_arcs, verticals


def short_arc_count(d: AffineDiagram) -> int:
    """Number of short horizontal edges per period (top plus bottom)."""
    top_arcs, bottom_arcs, _ = edge_list(d)
    return len(top_arcs) + len(bottom_arcs)


def _involution_problems(d: AffineDiagram) -> list[str]:
    problems = []
    for side, row in ((TOP, d.top), (BOT, d.bottom)):
        for i in range(1, d.n + 1):
            tgt = row[i - 1]
            if tgt == (side, i):
                problems.append(f"fixed point at {side}{i}")
            elif partner(d, *tgt) != (side, i):
                problems.append(f"involution breach at {side}{i}")
    return problems


def _crosses(e1, e2) -> bool:
    """Whether two concrete edges must intersect.  Edges are
    ("T"|"B", p, q) arcs with p < q, or ("V", top_pos, bottom_pos)."""
    k1, a1, b1 = e1
    k2, a2, b2 = e2
    if k1 == "V" and k2 == "V":
        return (a1 - a2) * (b1 - b2) <= 0
    if k1 == "V":
        e1, e2 = e2, e1
        k1, a1, b1 = e1
        k2, a2, b2 = e2
    if k2 == "V":
        # arc vs vertical: only the endpoint on the arc's side matters
        end = a2 if k1 == TOP else b2
        return a1 < end < b1
    if k1 != k2:
        return False
    return (a1 < a2 < b1 < b2) or (a2 < a1 < b2 < b1)


def validate(d: AffineDiagram) -> list[str]:
    """All invariant violations (empty list means the diagram is valid)."""
    problems = _involution_problems(d)
    if problems:
        return problems
    top_arcs, bottom_arcs, verticals = edge_list(d)
    if d.loops and verticals:
        problems.append("loops with vertical edges")
    if len(top_arcs) != len(bottom_arcs):
        problems.append("unbalanced short-arc counts")
    edges = (
        [(TOP, p, q) for p, q in top_arcs]
        + [(BOT, p, q) for p, q in bottom_arcs]
        + [("V", p, q) for p, q in verticals]
    )
    span = max((abs(e[2] - e[1]) for e in edges), default=0)
    reach = span // d.n + 2
    for i, e1 in enumerate(edges):
        for j, e2 in enumerate(edges):
            if j < i:
                continue
            for m in range(-reach, reach + 1):
                if i == j and m == 0:
                    continue
                shifted = (e2[0], e2[1] + m * d.n, e2[2] + m * d.n)
                if _crosses(e1, shifted):
                    problems.append(f"crossing pair {e1} / {shifted}")
    return problems


@lru_cache(maxsize=1 << 18)
def _nu_vector(d: AffineDiagram) -> tuple[int, ...]:
    n = d.n
    top_arcs, bottom_arcs, verticals = edge_list(d)
    spans = [(p, q) for p, q in top_arcs + bottom_arcs]
    spans += [(min(p, q), max(p, q)) for p, q in verticals]
    out = []
    for k in range(1, n + 1):
        total = d.loops
        for lo, hi in spans:
            if hi - lo < 1:
                continue
            # lifts of the line between classes k and k+1 inside (lo, hi):
            # integers m with lo <= k + m*n <= hi - 1
            m_lo = -((lo - k) // -n)
            m_hi = (hi - 1 - k) // n
            if m_hi >= m_lo:
                total += m_hi - m_lo + 1
        out.append(total)
    return tuple(out)


def crossing_number(d: AffineDiagram, k: int) -> int:
    """Crossings of the diagram with the vertical line between classes k
    and k+1, drawn geodesically; each winding loop contributes 1."""
    if not 1 <= k <= d.n:
        raise ValueError(f"class {k} out of range 1..{d.n}")
    problems = _involution_problems(d)
    if problems:
        raise ValueError(f"invalid diagram: {problems[0]}")
    return _nu_vector(d)[k - 1]


def is_admissible(d: AffineDiagram) -> bool:
    """Identity, or at least one horizontal edge and all crossing numbers even."""
    problems = _involution_problems(d)
    if problems:
        raise ValueError(f"invalid diagram: {problems[0]}")
    if d == identity(d.n):
        return True
    top_arcs, bottom_arcs, _ = edge_list(d)
    if not (top_arcs or bottom_arcs or d.loops):
        return False
    return all(v % 2 == 0 for v in _nu_vector(d))


def length(d: AffineDiagram) -> int:
    """Half the total crossing count; defined for admissible diagrams."""
    if not is_admissible(d):
        raise ValueError("length is defined for admissible diagrams only")
    return sum(_nu_vector(d)) // 2


def descent_arcs(d: AffineDiagram, side: str) -> frozenset[int]:
    """Classes i whose nodes i, i+1 on the given row are joined by a
    minimal arc; for a stacked word diagram this is the descent set."""
    row = d.top if side == TOP else d.bottom
    return frozenset(i for i in range(1, d.n + 1) if row[i - 1] == (side, i + 1))


def multiply(a: AffineDiagram, b: AffineDiagram) -> ProductResult:
    """Stack a on top of b; returns the composite diagram and the number of
    contractible middle loops (the exponent of the loop scalar)."""
    if a.n != b.n:
        raise ValueError(f"mismatched sizes {a.n} and {b.n}")
    n = a.n
    touched = [False] * (n + 1)

    def walk(in_a: bool, side: str, pos: int) -> NodeRef:
        steps = 0
        while True:
            steps += 1
            if steps > 2 * n + 4:
                raise AssertionError("runaway connectivity trace")
            if in_a:
                side, pos = partner(a, side, pos)
                if side == TOP:
                    return (TOP, pos)
                touched[class_of(n, pos)] = True
                in_a, side = False, TOP
            else:
                side, pos = partner(b, side, pos)
                if side == BOT:
                    return (BOT, pos)
                touched[class_of(n, pos)] = True
                in_a, side = True, BOT

    top_row = tuple(walk(True, TOP, i) for i in range(1, n + 1))
    bottom_row = tuple(walk(False, BOT, i) for i in range(1, n + 1))

    contractible = 0
    winding = 0
    done = [False] * (n + 1)
    for c in range(1, n + 1):
        if touched[c] or done[c]:
            continue
        pos = c
        steps = 0
        while True:
            steps += 1
            assert steps <= n + 2, "runaway middle cycle"
            s2, p2 = partner(a, BOT, pos)
            assert s2 == BOT, "middle cycle escaped through the top diagram"
            done[class_of(n, p2)] = True
            s3, p3 = partner(b, TOP, p2)
            assert s3 == TOP, "middle cycle escaped through the bottom diagram"
            done[class_of(n, p3)] = True
            pos = p3
            if class_of(n, pos) == c:
                break
        offset = (pos - c) // n
        if offset == 0:
            contractible += 1
        else:
            assert abs(offset) == 1, "middle cycle winds more than once"
            winding += 1

    if winding:
        assert all(s == TOP for s, _ in top_row), \
            "winding middle cycle alongside a through strand"
    diagram = AffineDiagram(n, top_row, bottom_row, a.loops + b.loops + winding)
    return ProductResult(diagram, contractible)


def canonical_key(d: AffineDiagram) -> bytes:
    """Injective deterministic serialization usable as an equality key."""
    parts = [str(d.n), str(d.loops)]
    for row in (d.top, d.bottom):
        parts.extend(f"{s}{p}" for s, p in row)
    return "|".join(parts).encode("ascii")


def to_json_dict(d: AffineDiagram) -> dict:
    return {
        "n": d.n,
        "top": [{"side": s, "pos": p} for s, p in d.top],
        "bottom": [{"side": s, "pos": p} for s, p in d.bottom],
        "loops": d.loops,
    }


def from_json_dict(obj: dict) -> AffineDiagram:
    try:
        n = int(obj["n"])
        top = tuple((e["side"], int(e["pos"])) for e in obj["top"])
        bottom = tuple((e["side"], int(e["pos"])) for e in obj["bottom"])
        loops = int(obj.get("loops", 0))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram JSON: {exc}") from exc
    d = AffineDiagram(n, top, bottom, loops)
    problems = validate(d)
    if problems:
        raise ValueError(f"invalid diagram: {problems[0]}")
    return d


def mirror(d: AffineDiagram) -> AffineDiagram:
    """Swap the two rows (the anti-automorphism reversing words)."""
    flip = {TOP: BOT, BOT: TOP}
    return replace(
        d,
        top=tuple((flip[s], p) for s, p in d.bottom),
        bottom=tuple((flip[s], p) for s, p in d.top),
    )
