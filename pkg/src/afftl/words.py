"""Word-level machinery for the affine Coxeter group of the cyclic graph.

Words are tuples of generator indices in 1..n.  The elements of interest
are the fully commutative ("FC") ones: those none of whose reduced
expressions contain a factor sts with s, t adjacent.  A reduced word of an
FC element has a single commutation class, which makes word-level
algorithms exact: left/right descents are read off by greedy commutations,
and the obstruction produced by appending a letter that breaks full
commutativity can be located by searching the class.

The module also hosts an affine-permutation model of the group (window
notation), used throughout as an independent oracle for lengths, element
identity and involution tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import GroupConfig

Word = tuple[int, ...]


def check_word(cfg: GroupConfig, word) -> Word:
    word = tuple(word)
    for s in word:
        cfg.check_generator(s)
    return word


def support(word) -> frozenset[int]:
    """Set of generators appearing in the word."""
    return frozenset(word)


def greedy_front(cfg: GroupConfig, word, s: int) -> Word | None:
    """Move an occurrence of s to the front by swapping commuting letters.

    Returns a word for the same element starting with s, or None when every
    occurrence of s is blocked by an earlier non-commuting letter.  For a
    reduced word of an FC element this decides s in the left descent set.
    """
    cfg.check_generator(s)
    word = tuple(word)
    for p, letter in enumerate(word):
        if letter == s:
            return (s,) + word[:p] + word[p + 1:]
        if cfg.adjacent(letter, s):
            return None
    return None


def greedy_back(cfg: GroupConfig, word, s: int) -> Word | None:
    """Mirror of greedy_front: a word for the same element ending with s."""
    moved = greedy_front(cfg, tuple(reversed(word)), s)
    return tuple(reversed(moved)) if moved is not None else None


def left_descents(cfg: GroupConfig, word) -> frozenset[int]:
    """Left descent set of an FC element given by a reduced word."""
    return frozenset(s for s in cfg.generators() if greedy_front(cfg, word, s) is not None)


def right_descents(cfg: GroupConfig, word) -> frozenset[int]:
    return frozenset(s for s in cfg.generators() if greedy_back(cfg, word, s) is not None)


def commutation_class(cfg: GroupConfig, word, cap: int = 500_000) -> frozenset[Word]:
    """All words obtainable by swapping adjacent commuting letters."""
    start = check_word(cfg, word)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a != b and not cfg.adjacent(a, b):
                w2 = w[:i] + (b, a) + w[i + 2:]
                if w2 not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError("commutation class exceeds cap")
                    seen.add(w2)
                    stack.append(w2)
    return frozenset(seen)


def _has_braid_factor(cfg: GroupConfig, w: Word) -> bool:
    return any(
        w[i] == w[i + 2] and cfg.adjacent(w[i], w[i + 1])
        for i in range(len(w) - 2)
    )


def class_has_braid(cfg: GroupConfig, word) -> bool:
    """Whether some word in the commutation class contains a factor sts
    with s, t adjacent.  This is the definitional test used by the oracles;
    heap_is_fc is the fast equivalent."""
    start = check_word(cfg, word)
    if _has_braid_factor(cfg, start):
        return True
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a != b and not cfg.adjacent(a, b):
                w2 = w[:i] + (b, a) + w[i + 2:]
                if w2 not in seen:
                    if _has_braid_factor(cfg, w2):
                        return True
                    seen.add(w2)
                    stack.append(w2)
    return False


def _heap_reach(cfg: GroupConfig, word: Word) -> list[list[bool]]:
    """Reachability of the heap order: position i precedes j when i < j and
    the letters are equal or adjacent, closed transitively."""
    m = len(word)
    direct = [[i < j and (word[i] == word[j] or cfg.adjacent(word[i], word[j]))
               for j in range(m)] for i in range(m)]
    reach = [row[:] for row in direct]
    for i in range(m - 2, -1, -1):
        for j in range(i + 1, m):
            if not reach[i][j]:
                reach[i][j] = any(direct[i][k] and reach[k][j] for k in range(i + 1, j))
    return reach


def heap_is_fc(cfg: GroupConfig, word) -> bool:
    """FC test for a word already known to be reduced.

    Between two consecutive occurrences of a letter s in the heap order
    there must lie at least two other elements; exactly one means some
    commutation-equivalent word contains a braid factor sts.
    """
    word = tuple(word)
    reach = _heap_reach(cfg, word)
    by_letter: dict[int, list[int]] = {}
    for p, s in enumerate(word):
        by_letter.setdefault(s, []).append(p)
    for positions in by_letter.values():
        for x, z in zip(positions, positions[1:]):
            between = sum(1 for u in range(x + 1, z) if reach[x][u] and reach[u][z])
            if between <= 1:
                return False
    return True


def is_fc_reduced(cfg: GroupConfig, word) -> bool:
    """Whether the word is a reduced expression of a fully commutative
    element.  Reducedness comes from the affine-permutation oracle."""
    word = check_word(cfg, word)
    if to_affine_permutation(cfg, word).length() != len(word):
        return False
    return heap_is_fc(cfg, word)


@dataclass(frozen=True)
class BraidWitness:
    """Factorization word = w1 + (t, s) + w2 with s adjacent to t and t
    commuting with every letter of w2."""
    w1: Word
    s: int
    w2: Word


def braid_witness(cfg: GroupConfig, word, t: int) -> BraidWitness:
    """Locate how appending t to a reduced FC word breaks full commutativity.

    Exists exactly when word + (t,) is no longer a reduced word of an FC
    element while the word itself is; raises ValueError otherwise.  The
    adjacent letter s is unique across all valid factorizations.
    """
    word = check_word(cfg, word)
    cfg.check_generator(t)
    if not is_fc_reduced(cfg, word):
        raise ValueError("word must be a reduced word of a fully commutative element")
    if greedy_back(cfg, word, t) is not None or is_fc_reduced(cfg, word + (t,)):
        raise ValueError("appending the letter keeps the element fully commutative")
    for u in sorted(commutation_class(cfg, word)):
        for p in range(len(u) - 1):
            if u[p] != t:
                continue
            s = u[p + 1]
            if not cfg.adjacent(t, s):
                continue
            if all(cfg.commutes(t, x) for x in u[p + 2:]):
                return BraidWitness(u[:p], s, u[p + 2:])
    raise AssertionError("no factorization found; input was not reduced FC")


def braid_witness_left(cfg: GroupConfig, word, t: int) -> BraidWitness:
    """Mirror statement for prepending t: word = w1 + (s, t) + w2 with t
    commuting with every letter of w1.  Returned as BraidWitness with the
    same field names (w1 before s, w2 after t)."""
    m = braid_witness(cfg, tuple(reversed(word)), t)
    return BraidWitness(tuple(reversed(m.w2)), m.s, tuple(reversed(m.w1)))


@dataclass(frozen=True)
class AffinePermutation:
    """Window notation for a bijection of the integers with
    sigma(i + n) = sigma(i) + n and zero net displacement on 1..n."""
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if len(self.window) != n:
            raise ValueError("window must have n entries")
        if sum(self.window) != n * (n + 1) // 2:
            raise ValueError("window displacements must sum to zero")
        if len({v % n for v in self.window}) != n:
            raise ValueError("window entries must be distinct modulo n")

    @classmethod
    def identity(cls, n: int) -> AffinePermutation:
        return cls(n, tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def image(self, i: int) -> int:
        c = (i - 1) % self.n + 1
        return self.window[c - 1] + (i - c)

    def times_generator(self, i: int) -> AffinePermutation:
        """Right multiplication by the adjacent transposition s_i."""
        n = self.n
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        w = list(self.window)
        if i < n:
            w[i - 1], w[i] = w[i], w[i - 1]
        else:
            w[0], w[n - 1] = w[n - 1] - n, w[0] + n
        return AffinePermutation(n, tuple(w))

    def compose(self, other: AffinePermutation) -> AffinePermutation:
        """self after other, i.e. the group product self * other."""
        if self.n != other.n:
            raise ValueError("mismatched n")
        win = []
        for i in range(1, self.n + 1):
            q = other.window[i - 1]
            c = (q - 1) % self.n + 1
            win.append(self.window[c - 1] + (q - c))
        return AffinePermutation(self.n, tuple(win))

    def inverse(self) -> AffinePermutation:
        out = [0] * self.n
        for i in range(1, self.n + 1):
            v = self.window[i - 1]
            c = (v - 1) % self.n + 1
            out[c - 1] = i - (v - c)
        return AffinePermutation(self.n, tuple(out))

    def length(self) -> int:
        """Coxeter length (periodic inversion count)."""
        w = self.window
        n = self.n
        total = 0
        for i in range(n):
            for j in range(i + 1, n):
                total += abs((w[j] - w[i]) // n)
        return total

    def is_involution(self) -> bool:
        return self.compose(self).is_identity()


def to_affine_permutation(cfg: GroupConfig, word) -> AffinePermutation:
    word = check_word(cfg, word)
    p = AffinePermutation.identity(cfg.n)
    for s in word:
        p = p.times_generator(s)
    return p


@lru_cache(maxsize=None)
def _perm_of(n: int, word: Word) -> AffinePermutation:
    return to_affine_permutation(GroupConfig(n), word)


def perm_of(cfg: GroupConfig, word) -> AffinePermutation:
    """Cached variant of to_affine_permutation."""
    return _perm_of(cfg.n, tuple(word))


@dataclass(frozen=True)
class InducedSubgraph:
    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class LeftDecomposition:
    """Greedy factorization into blocks of pairwise commuting descents.

    groups[k] is the left descent set of the element remaining after the
    first k blocks are peeled; concatenating the blocks reproduces a
    reduced word.  graphs[k] is the subgraph of the generator cycle induced
    by groups[k] | groups[k+1].
    """
    groups: tuple[frozenset[int], ...]
    graphs: tuple[InducedSubgraph, ...]

    def word(self) -> Word:
        out: list[int] = []
        for g in self.groups:
            out.extend(sorted(g))
        return tuple(out)


def _induced_subgraph(cfg: GroupConfig, nodes: frozenset[int]) -> InducedSubgraph:
    edges = set()
    for i in nodes:
        j = cfg.class_of(i + 1)
        if j in nodes:
            edges.add((min(i, j), max(i, j)))
    return InducedSubgraph(nodes, frozenset(edges))


def left_decomposition(cfg: GroupConfig, word) -> LeftDecomposition:
    """Left decomposition of an FC element given by a reduced word."""
    w = check_word(cfg, word)
    groups: list[frozenset[int]] = []
    while w:
        g = left_descents(cfg, w)
        for a in g:
            for b in g:
                if a < b and cfg.adjacent(a, b):
                    raise ValueError("descent set not commuting; word is not reduced FC")
        for s in sorted(g):
            w = greedy_front(cfg, w, s)[1:]
        groups.append(g)
    graphs = tuple(
        _induced_subgraph(cfg, groups[k] | groups[k + 1])
        for k in range(len(groups) - 1)
    )
    return LeftDecomposition(tuple(groups), graphs)


def right_groups(cfg: GroupConfig, word) -> tuple[frozenset[int], ...]:
    """Blocks of the right decomposition, in left-to-right word order (the
    last block is the right descent set of the element)."""
    ld = left_decomposition(cfg, tuple(reversed(tuple(word))))
    return tuple(reversed(ld.groups))
