"""Independent checks of an oriented labeling.

Everything here is recomputed from the arcs and labels alone; the construction
trace is consulted only for the class assignment and the path bookkeeping, so
a bug in the construction's own sums cannot hide itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .construction import ConstructionTrace
from .graph_core import (
    Caterpillar,
    OrientedLabeling,
    VertexClass,
    edge,
)


@dataclass
class VerificationReport:
    sums: dict[int, int]
    weights: dict[int, int]
    class_ranges: dict[str, tuple[int, int]]
    antimagic: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.antimagic and not self.violations

    def to_json_dict(self) -> dict:
        return {
            "sums": {str(v): s for v, s in sorted(self.sums.items())},
            "weights": {str(v): w for v, w in sorted(self.weights.items())},
            "class_ranges": {k: list(v) for k, v in self.class_ranges.items()},
            "antimagic": self.antimagic,
            "violations": self.violations,
        }


def oriented_sums(ol: OrientedLabeling) -> dict[int, int]:
    """Per-vertex sum of entering labels minus leaving labels."""
    sums = {v: 0 for v in range(ol.n)}
    for (tail, head), lbl in zip(ol.arcs, ol.labels):
        sums[head] += lbl
        sums[tail] -= lbl
    return sums


def verify_antimagic(ol: OrientedLabeling) -> bool:
    """True iff all oriented vertex sums are pairwise distinct."""
    values = sorted(oriented_sums(ol).values())
    return all(a != b for a, b in zip(values, values[1:]))


def _check_distinct(values: list[int], name: str, violations: list[str]) -> None:
    if len(set(values)) != len(values):
        violations.append(f"{name}_not_distinct")


def check_weight_classes(ol: OrientedLabeling, trace: ConstructionTrace) -> VerificationReport:
    """Validate the per-class weight intervals the construction promises.

    Light weights fill [0, k1-1]; degree-one weights fill [k1, k2+1]; heavy
    vertices without heavy edges land in [k2+2, m+k1], strictly decreasing in
    path index; heavy vertices with heavy edges exceed m+k1. The four observed
    ranges must not overlap and all weights must be pairwise distinct.
    """
    sums = oriented_sums(ol)
    weights = {v: abs(s) for v, s in sums.items()}
    p = trace.partition
    d = trace.decomposition
    m, k1, k2 = p.m, p.k1, p.k2
    violations: list[str] = []

    path_index = {v: i for i, v in enumerate(d.path)}
    has_heavy_edge = {v: False for v in range(ol.n)}
    for a, b in d.nonpath_edges:
        u = a if a in path_index else b
        if trace.classes[u] is VertexClass.HEAVY:
            has_heavy_edge[u] = True

    light = [v for v, c in trace.classes.items() if c is VertexClass.LIGHT]
    deg_one = [
        v
        for v, c in trace.classes.items()
        if c in (VertexClass.PATH_END_LEAF, VertexClass.NON_PATH_LEAF)
    ]
    heavy_plain = [
        v for v, c in trace.classes.items() if c is VertexClass.HEAVY and not has_heavy_edge[v]
    ]
    heavy_loaded = [
        v for v, c in trace.classes.items() if c is VertexClass.HEAVY and has_heavy_edge[v]
    ]

    def observe(name: str, vs: list[int], lo: int, hi: int | None) -> None:
        if not vs:
            return
        ws = [weights[v] for v in vs]
        _check_distinct(ws, name, violations)
        if min(ws) < lo or (hi is not None and max(ws) > hi):
            violations.append(f"{name}_range")
        ranges[name] = (min(ws), max(ws))

    ranges: dict[str, tuple[int, int]] = {}
    observe("light", light, 0, k1 - 1)
    observe("degree_one", deg_one, k1, k2 + 1)
    observe("heavy_no_heavy_edge", heavy_plain, k2 + 2, m + k1)
    observe("heavy_with_heavy_edge", heavy_loaded, m + k1 + 1, None)

    # Weights of plain heavy vertices strictly decrease along the path.
    by_index = sorted(heavy_plain, key=path_index.__getitem__)
    if any(weights[a] <= weights[b] for a, b in zip(by_index, by_index[1:])):
        violations.append("heavy_no_heavy_edge_not_decreasing")

    u0 = d.path[0]
    if weights[u0] != k1:
        violations.append("u0_weight")
    if d.trimmed_tail is None:
        uk = d.path[-1]
        if weights[uk] != k2 + 1:
            violations.append("uk_weight")

    observed = sorted(ranges.items(), key=lambda kv: kv[1])
    if any(a[1][1] >= b[1][0] for a, b in zip(observed, observed[1:])):
        violations.append("class_ranges_overlap")
    _check_distinct(list(weights.values()), "all_weights", violations)

    return VerificationReport(
        sums=sums,
        weights=weights,
        class_ranges=ranges,
        antimagic=verify_antimagic(ol),
        violations=violations,
    )


def check_claims(
    c: Caterpillar, ol: OrientedLabeling, trace: ConstructionTrace
) -> list[tuple[str, bool]]:
    """Numerically evaluate the three structural claims behind the construction.

    claim1: k1 + k2 = m.
    claim2: every light vertex's path weight is k2 or k2+1, with k2+1 exactly
            at even path indices and at the odd-case endpoint.
    claim3: the number of light vertices is at most k1 - 1.

    Path weights are recomputed from the final arcs restricted to path edges.
    """
    p = trace.partition
    d = trace.decomposition
    claim1 = p.k1 + p.k2 == c.m

    path_edge_set = set(d.path_edges)
    path_sums: dict[int, int] = {v: 0 for v in d.path}
    for (tail, head), lbl in zip(ol.arcs, ol.labels):
        if edge(tail, head) in path_edge_set:
            path_sums[head] += lbl
            path_sums[tail] -= lbl

    claim2 = True
    for v in trace.light_order:
        idx = d.path_index(v)
        w = abs(path_sums[v])
        expect_high = idx % 2 == 0 or (d.trimmed_tail is not None and idx == d.k)
        if w != (p.k2 + 1 if expect_high else p.k2):
            claim2 = False
    claim3 = trace.n_l <= p.k1 - 1

    return [("claim1", claim1), ("claim2", claim2), ("claim3", claim3)]
