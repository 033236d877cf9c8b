"""Aggregated invariant checks, runnable from the command line.

Each check returns (name, passed, detail).  The suite covers the defining
relations, unit/associativity laws, crossing-count statistics, the
straightening round trip, enumeration count agreement between the diagram
engine and the affine-permutation oracle, agreement of the two
multiplication engines, the arc-count invariant against its brute-force
definition, and order-independence of descent cancellation.
"""

from __future__ import annotations

import random

from . import algebra, cells, diagrams, explore, straightening, words
from .config import GroupConfig

Check = tuple[str, bool, str]


def _records(cfg: GroupConfig, max_len: int):
    return list(explore.enumerate_elements(cfg, max_len, with_labels=False))


def check_defining_relations(cfg: GroupConfig) -> Check:
    n = cfg.n
    for i in cfg.generators():
        gi = diagrams.generator(n, i)
        sq = diagrams.multiply(gi, gi)
        if not (sq.contractible == 1 and sq.diagram == gi):
            return ("defining-relations", False, f"square relation fails at {i}")
        for j in cfg.generators():
            if i == j:
                continue
            gj = diagrams.generator(n, j)
            ij = diagrams.multiply(gi, gj)
            ji = diagrams.multiply(gj, gi)
            if cfg.adjacent(i, j):
                iji = diagrams.multiply(ij.diagram, gi)
                if not (
                    ij.contractible == 0
                    and iji.contractible == 0
                    and iji.diagram == gi
                ):
                    return ("defining-relations", False, f"braid relation fails at {i},{j}")
            else:
                if not (
                    ij.contractible == ji.contractible == 0
                    and ij.diagram == ji.diagram
                ):
                    return ("defining-relations", False, f"commutation fails at {i},{j}")
    return ("defining-relations", True, f"n={n}")


def check_unit_laws(cfg: GroupConfig, recs) -> Check:
    one = diagrams.identity(cfg.n)
    for rec in recs:
        left = diagrams.multiply(one, rec.diagram)
        right = diagrams.multiply(rec.diagram, one)
        if not (
            left.contractible == right.contractible == 0
            and left.diagram == rec.diagram == right.diagram
        ):
            return ("unit-laws", False, f"fails at {rec.word}")
    return ("unit-laws", True, f"{len(recs)} diagrams")


def check_associativity(cfg: GroupConfig, recs, rng: random.Random, samples: int = 60) -> Check:
    pool = [r.diagram for r in recs]
    for _ in range(samples):
        a, b, c = (rng.choice(pool) for _ in range(3))
        ab = diagrams.multiply(a, b)
        ab_c = diagrams.multiply(ab.diagram, c)
        bc = diagrams.multiply(b, c)
        a_bc = diagrams.multiply(a, bc.diagram)
        if not (
            ab_c.diagram == a_bc.diagram
            and ab.contractible + ab_c.contractible
            == bc.contractible + a_bc.contractible
        ):
            return ("associativity", False, "triple found")
    return ("associativity", True, f"{samples} random triples")


def check_crossing_counts(cfg: GroupConfig, recs) -> Check:
    for rec in recs:
        for k in cfg.generators():
            if diagrams.crossing_number(rec.diagram, k) != 2 * rec.word.count(k):
                return ("crossing-counts", False, f"fails at {rec.word} k={k}")
    return ("crossing-counts", True, f"{len(recs)} elements")


def check_roundtrip(cfg: GroupConfig, recs) -> Check:
    for rec in recs:
        sw = straightening.straighten(rec.diagram)
        back = straightening.stack(cfg, sw.letters)
        if not (back.contractible == 0 and back.diagram == rec.diagram):
            return ("straighten-roundtrip", False, f"fails at {rec.word}")
    return ("straighten-roundtrip", True, f"{len(recs)} diagrams")


def check_counts_vs_oracle(cfg: GroupConfig, max_len: int) -> Check:
    primary = explore.wc_counts(cfg, max_len)
    oracle = explore.oracle_counts(cfg, max_len)
    if primary != oracle:
        return ("counts-vs-oracle", False, f"{primary} != {oracle}")
    return ("counts-vs-oracle", True, f"lengths 0..{max_len}")


def check_engine_agreement(cfg: GroupConfig, max_len: int = 3) -> Check:
    recs = _records(cfg, max_len)
    pairs = 0
    for ra in recs:
        for rb in recs:
            exp_r, word_r = algebra.rewrite_eval(cfg, rb.word, start=ra.word)
            prod = diagrams.multiply(ra.diagram, rb.diagram)
            same_elt = straightening.stack(cfg, word_r).diagram == prod.diagram
            if not (same_elt and exp_r == prod.contractible):
                return (
                    "engine-agreement",
                    False,
                    f"pair {ra.word} x {rb.word}",
                )
            pairs += 1
    return ("engine-agreement", True, f"{pairs} basis pairs")


def check_a_agreement(cfg: GroupConfig, recs, bound: int = 8) -> Check:
    n_checked = 0
    for rec in recs:
        if rec.length > bound:
            continue
        if cells.a_value(cfg, rec.word) != cells.a_bruteforce(cfg, rec.word, bound=bound):
            return ("a-agreement", False, f"fails at {rec.word}")
        n_checked += 1
    return ("a-agreement", True, f"{n_checked} elements")


def check_core_order_independence(
    cfg: GroupConfig, recs, rng: random.Random, samples: int = 40
) -> Check:
    pool = [r.word for r in recs if r.length >= 2]
    if not pool:
        return ("core-order-independence", True, "no elements at this horizon")
    for _ in range(samples):
        w = rng.choice(pool)
        det = cells.classify_core(cfg, cells.reduce_to_core(cfg, w).word)
        rnd = cells.classify_core(cfg, cells.reduce_to_core(cfg, w, rng=rng).word)
        if det != rnd:
            return ("core-order-independence", False, f"fails at {w}")
    return ("core-order-independence", True, f"{samples} randomized runs")


def check_involutions(cfg: GroupConfig, recs) -> Check:
    count = 0
    for rec in recs:
        if not words.perm_of(cfg, rec.word).is_involution():
            continue
        dec = cells.involution_decompose(cfg, rec.word)
        if cells.a_value(cfg, rec.word) != len(dec.core):
            return ("involutions", False, f"arc count mismatch at {rec.word}")
        count += 1
    return ("involutions", True, f"{count} involutions")


def check_neighbour_symmetry(cfg: GroupConfig) -> Check:
    cores = [tuple(sorted(t)) for t in cfg.commuting_sets()]
    for q in cores:
        for s, q2 in cells.core_neighbours(cfg, q):
            back = cells.core_neighbours(cfg, q2)
            if not any(w == q for _, w in back):
                return ("neighbour-symmetry", False, f"{q} -> {q2} not symmetric")
    return ("neighbour-symmetry", True, f"{len(cores)} cores")


def run_all(n: int, max_len: int, seed: int) -> list[Check]:
    cfg = GroupConfig(n)
    rng = random.Random(seed)
    recs = _records(cfg, max_len)
    checks = [
        check_defining_relations(cfg),
        check_unit_laws(cfg, recs),
        check_associativity(cfg, recs, rng),
        check_crossing_counts(cfg, recs),
        check_roundtrip(cfg, recs),
        check_counts_vs_oracle(cfg, max_len),
        check_engine_agreement(cfg, min(max_len, 3)),
        check_a_agreement(cfg, recs, bound=min(max_len, 8)),
        check_core_order_independence(cfg, recs, rng),
        check_involutions(cfg, recs),
        check_neighbour_symmetry(cfg),
    ]
    return checks
