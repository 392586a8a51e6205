"""Brute-force ground truth on small trees.

The search is deliberately dumb: every orientation is an edge-indexed bitmask,
every labeling a lexicographic permutation of [1, m], and the antimagic test
is a direct sum recount that shares no code with the verification module.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from . import verification
from .construction import construct
from .graph_core import Caterpillar, OrientedLabeling, ResourceLimitError, Tree

DEFAULT_CAP = 8
FULL_COUNT_MAX_M = 6  # full-count mode is the default only up to here


@dataclass(frozen=True)
class OracleResult:
    m: int
    orientations_with_solution: int
    total_antimagic_pairs: int
    witness: Optional[OrientedLabeling]
    pairs_enumerated: int


def sums_distinct(n: int, edges: tuple, orientation: int, labeling: tuple) -> bool:
    """Antimagic test for one (orientation bitmask, label permutation) pair.

    Bit i set means edges[i] = (u, v) with u < v runs v -> u; clear means u -> v.
    labeling[i] is the label of edges[i].
    """
    sums = [0] * n
    for i, (u, v) in enumerate(edges):
        lbl = labeling[i]
        if orientation >> i & 1:
            sums[u] += lbl
            sums[v] -= lbl
        else:
            sums[v] += lbl
            sums[u] -= lbl
    return len(set(sums)) == n


def _check_cap(m: int, cap: int) -> None:
    if m > cap:
        raise ResourceLimitError(
            f"m={m} exceeds the oracle cap {cap}; raise --cap or ANTIMAGIC_ORACLE_CAP explicitly"
        )


def _as_labeling(t: Tree, orientation: int, labeling: tuple) -> OrientedLabeling:
    arcs = tuple(
        (v, u) if orientation >> i & 1 else (u, v) for i, (u, v) in enumerate(t.edges)
    )
    return OrientedLabeling(n=t.n, arcs=arcs, labels=tuple(labeling))


def exhaustive_search(
    t: Tree,
    cap: int = DEFAULT_CAP,
    count_all: Optional[bool] = None,
    early_exit: bool = False,
) -> OracleResult:
    """Enumerate all 2^m orientations x m! labelings of a tree.

    count_all defaults to True only for m <= FULL_COUNT_MAX_M. With
    early_exit the search stops at the first witness; otherwise the full
    count of antimagic pairs and of orientations admitting one is returned.
    """
    m = len(t.edges)
    _check_cap(m, cap)
    if count_all is None:
        count_all = m <= FULL_COUNT_MAX_M
    edges = t.edges
    n = t.n
    witness = None
    good_orientations = 0
    total_pairs = 0
    enumerated = 0
    for orientation in range(1 << m):
        hit_here = 0
        for labeling in permutations(range(1, m + 1)):
            enumerated += 1
            if sums_distinct(n, edges, orientation, labeling):
                hit_here += 1
                if witness is None:
                    witness = _as_labeling(t, orientation, labeling)
                if early_exit or not count_all:
                    break
        if hit_here:
            good_orientations += 1
            total_pairs += hit_here
        if early_exit and witness is not None:
            break
    return OracleResult(
        m=m,
        orientations_with_solution=good_orientations,
        total_antimagic_pairs=total_pairs,
        witness=witness,
        pairs_enumerated=enumerated,
    )


def confirm_construction(c: Caterpillar, seed: int = 0, cap: int = DEFAULT_CAP) -> bool:
    """True iff the constructed output is an orientation of c that the oracle accepts."""
    _check_cap(c.m, cap)
    ol, _ = construct(c, seed=seed)
    if ol.undirected_edges() != frozenset(c.tree.edges):
        return False
    orientation = 0
    label_of = {}
    for (tail, head), lbl in zip(ol.arcs, ol.labels):
        label_of[(min(tail, head), max(tail, head))] = lbl
        if tail > head:
            orientation |= 1 << c.tree.edges.index((head, tail))
    labeling = tuple(label_of[e] for e in c.tree.edges)
    accepted = sums_distinct(c.tree.n, c.tree.edges, orientation, labeling)
    return accepted and verification.verify_antimagic(ol)


def agreement_on_random_pairs(t: Tree, pairs: int, seed: int, cap: int = DEFAULT_CAP) -> int:
    """Count disagreements between the oracle test and the verifier on random pairs."""
    m = len(t.edges)
    _check_cap(m, cap)
    rng = random.Random(seed)
    base = list(range(1, m + 1))
    mismatches = 0
    for _ in range(pairs):
        orientation = rng.randrange(1 << m)
        labeling = tuple(rng.sample(base, m))
        a = sums_distinct(t.n, t.edges, orientation, labeling)
        b = verification.verify_antimagic(_as_labeling(t, orientation, labeling))
        if a != b:
            mismatches += 1
    return mismatches


def agreement_on_all_pairs(t: Tree, cap: int = FULL_COUNT_MAX_M) -> tuple[int, int]:
    """(pairs checked, disagreements) over the full enumeration."""
    m = len(t.edges)
    _check_cap(m, cap)
    checked = 0
    mismatches = 0
    expected = (1 << m) * math.factorial(m)
    for orientation in range(1 << m):
        for labeling in permutations(range(1, m + 1)):
            checked += 1
            a = sums_distinct(t.n, t.edges, orientation, labeling)
            b = verification.verify_antimagic(_as_labeling(t, orientation, labeling))
            if a != b:
                mismatches += 1
    assert checked == expected
    return checked, mismatches
