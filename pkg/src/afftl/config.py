"""Configuration for the cyclic generator graph on n nodes.

Generators are indexed 1..n and sit on a cycle: s_i and s_j satisfy the
braid relation exactly when i and j are consecutive modulo n, and commute
otherwise.  For n == 3 every pair is adjacent.  n >= 3 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class GroupConfig:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"need at least 3 generators, got n={self.n}")

    def generators(self) -> range:
        return range(1, self.n + 1)

    def check_generator(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range 1..{self.n}")
        return i

    def class_of(self, pos: int) -> int:
        """Congruence class of an arbitrary integer position, in 1..n."""
        return (pos - 1) % self.n + 1

    def adjacent(self, i: int, j: int) -> bool:
        """True iff s_i and s_j do not commute (consecutive mod n)."""
        self.check_generator(i)
        self.check_generator(j)
        return (i - j) % self.n in (1, self.n - 1)

    def commutes(self, i: int, j: int) -> bool:
        return i == j or not self.adjacent(i, j)

    def neighbours_of(self, i: int) -> tuple[int, int]:
        """The two generators not commuting with s_i, sorted."""
        self.check_generator(i)
        a, b = self.class_of(i - 1), self.class_of(i + 1)
        return (a, b) if a < b else (b, a)

    def commuting_sets(self) -> tuple[frozenset[int], ...]:
        """All sets of pairwise non-adjacent generators (including the empty set)."""
        return _independent_sets(self.n)

    def alternating_sets(self) -> tuple[frozenset[int], frozenset[int]]:
        """For even n, the two maximal commuting sets (odd classes, even classes)."""
        if self.n % 2:
            raise ValueError("maximal alternating sets exist only for even n")
        odd = frozenset(range(1, self.n, 2))
        even = frozenset(range(2, self.n + 1, 2))
        return odd, even


@lru_cache(maxsize=None)
def _independent_sets(n: int) -> tuple[frozenset[int], ...]:
    if n > 20:
        raise ValueError("independent-set enumeration capped at n <= 20")
    out = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            if mask >> i & 1 and mask >> ((i + 1) % n) & 1:
                ok = False
                break
        if ok:
            out.append(frozenset(i + 1 for i in range(n) if mask >> i & 1))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(out)
