"""Seven-step construction of an antimagic orientation of a caterpillar.

Given a caterpillar with m edges and r leaves, the steps are:

  1. split the labels [1, m] at k1 = ceil((m-r+1)/2) and k2 = ceil((m+r)/2) - 1;
  2. label the even-length path with L1 and L3 alternating from the top;
  3. classify the interior path vertices as light or heavy;
  4. orient the path, keeping direction through light vertices and flipping
     at heavy ones;
  5. orient the off-path edges so light edges shrink and heavy edges grow
     the weight of their path vertex;
  6. give light edges the largest labels of L2, by nondecreasing path weight;
  7. spend the rest of L2 on heavy edges: a random draw for all but one edge
     per vertex, then the leftovers in nondecreasing partial-weight order.

The resulting oriented labeling has pairwise distinct vertex sums for every
caterpillar and every random draw in step 7.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph_core import (
    Arc,
    Caterpillar,
    Edge,
    InputError,
    InvariantViolation,
    LabelPartition,
    OrientedLabeling,
    PathDecomposition,
    VertexClass,
    edge,
    longest_path_decomposition,
)


@dataclass(frozen=True)
class ConstructionTrace:
    """Everything the construction decided, for checkers and debug output."""

    partition: LabelPartition
    decomposition: PathDecomposition
    classes: dict[int, VertexClass]
    path_arc_directions: tuple[bool, ...]  # True: path edge i runs u_i -> u_{i+1}
    light_order: tuple[int, ...]
    heavy_phase1_assignments: dict[Edge, int]
    heavy_order: tuple[int, ...]
    partial_weights: dict[int, int]  # per heavy_order vertex, before its last label

    @property
    def n_l(self) -> int:
        return len(self.light_order)

    @property
    def n_h(self) -> int:
        return len(self.heavy_order)


def compute_label_partition(m: int, r: int) -> LabelPartition:
    """Step 1. k1 + k2 = m always holds (numerically retested elsewhere)."""
    if m < 2:
        raise InputError(f"need at least 2 edges, got m={m}")
    if not 2 <= r <= m:
        raise InputError(f"leaf count r={r} outside [2, m={m}]")
    k1 = -((m - r + 1) // -2)  # ceil((m-r+1)/2)
    k2 = -((m + r) // -2) - 1  # ceil((m+r)/2) - 1
    return LabelPartition(m=m, k1=k1, k2=k2)


def label_path_edges(d: PathDecomposition, p: LabelPartition) -> dict[Edge, int]:
    """Step 2: path edge i gets k1 - i/2 (even i) or m - (i-1)/2 (odd i)."""
    labels: dict[Edge, int] = {}
    for i, e in enumerate(d.path_edges):
        labels[e] = p.k1 - i // 2 if i % 2 == 0 else p.m - (i - 1) // 2
    used = sorted(labels.values())
    if used != sorted(list(p.L1) + list(p.L3)):
        raise InvariantViolation("path labels do not exhaust L1 and L3")
    return labels


def _offpath_neighbors(
    c: Caterpillar, d: PathDecomposition, v: int, on_path: set[int] | None = None
) -> list[int]:
    if on_path is None:
        on_path = set(d.path)
    return [w for w in c.tree.adjacency[v] if w not in on_path]


def classify_vertices(
    c: Caterpillar, d: PathDecomposition, path_labels: dict[Edge, int]
) -> dict[int, VertexClass]:
    """Step 3: interior path vertices split into light and heavy.

    A path vertex of degree >= 2 is light when its plain sum of incident path
    labels stays below m and exactly one neighbor lies off the path; otherwise
    it is heavy. Degree-one path vertices (u_0, and u_k in the even case) are
    path-end leaves; everything off the path is a plain leaf.
    """
    classes: dict[int, VertexClass] = {}
    on_path = set(d.path)
    for v in range(c.tree.n):
        if v not in on_path:
            classes[v] = VertexClass.NON_PATH_LEAF
    m = len(c.tree.edges)
    for idx, v in enumerate(d.path):
        if len(c.tree.adjacency[v]) == 1:
            classes[v] = VertexClass.PATH_END_LEAF
            continue
        s_p = sum(path_labels[e] for e in _incident_path_edges(d, idx))
        offpath = sum(1 for w in c.tree.adjacency[v] if w not in on_path)
        classes[v] = VertexClass.LIGHT if s_p < m and offpath == 1 else VertexClass.HEAVY
    return classes


def _incident_path_edges(d: PathDecomposition, idx: int) -> list[Edge]:
    out = []
    if idx > 0:
        out.append(d.path_edges[idx - 1])
    if idx < d.k:
        out.append(d.path_edges[idx])
    return out


def orient_path(d: PathDecomposition, classes: dict[int, VertexClass]) -> tuple[bool, ...]:
    """Step 4. Direction flag per path edge; True means u_i -> u_{i+1}."""
    dirs = [True]  # u_0 -> u_1 always
    for i in range(1, d.k):
        cls = classes[d.path[i]]
        if cls is VertexClass.LIGHT:
            dirs.append(dirs[-1])
        elif cls is VertexClass.HEAVY:
            dirs.append(not dirs[-1])
        else:
            raise InvariantViolation(f"interior path vertex {d.path[i]} is neither light nor heavy")
    return tuple(dirs)


def path_oriented_sum(
    d: PathDecomposition, dirs: tuple[bool, ...], path_labels: dict[Edge, int], idx: int
) -> int:
    """Oriented sum of path vertex u_idx restricted to the oriented path."""
    total = 0
    if idx > 0:
        lbl = path_labels[d.path_edges[idx - 1]]
        total += lbl if dirs[idx - 1] else -lbl
    if idx < d.k:
        lbl = path_labels[d.path_edges[idx]]
        total += -lbl if dirs[idx] else lbl
    return total


def orient_nonpath_edges(
    c: Caterpillar,
    d: PathDecomposition,
    classes: dict[int, VertexClass],
    dirs: tuple[bool, ...],
    path_labels: dict[Edge, int],
) -> dict[Edge, Arc]:
    """Step 5: light edges point away from positive path sums, heavy edges into them."""
    index_of = {v: i for i, v in enumerate(d.path)}
    arcs: dict[Edge, Arc] = {}
    for e in d.nonpath_edges:
        a, b = e
        u, v = (a, b) if a in index_of else (b, a)
        if u not in index_of:
            raise InvariantViolation(f"non-path edge {e} touches no path vertex")
        s = path_oriented_sum(d, dirs, path_labels, index_of[u])
        if s == 0:
            raise InvariantViolation(f"zero oriented path sum at {u} with an off-path edge")
        if classes[u] is VertexClass.LIGHT:
            arcs[e] = (u, v) if s > 0 else (v, u)
        elif classes[u] is VertexClass.HEAVY:
            arcs[e] = (v, u) if s > 0 else (u, v)
        else:
            raise InvariantViolation(f"off-path edge at unclassified vertex {u}")
    return arcs


def label_light_edges(
    c: Caterpillar,
    d: PathDecomposition,
    p: LabelPartition,
    classes: dict[int, VertexClass],
    dirs: tuple[bool, ...],
    path_labels: dict[Edge, int],
) -> tuple[dict[Edge, int], tuple[int, ...]]:
    """Step 6: the t-th light vertex (by path weight, ties by index) gets k2 - t + 1."""
    lights = [
        (abs(path_oriented_sum(d, dirs, path_labels, i)), i, v)
        for i, v in enumerate(d.path)
        if classes[v] is VertexClass.LIGHT
    ]
    lights.sort()
    on_path = set(d.path)
    labels: dict[Edge, int] = {}
    order = []
    for t, (_, _, v) in enumerate(lights, start=1):
        offs = _offpath_neighbors(c, d, v, on_path)
        if len(offs) != 1:
            raise InvariantViolation(f"light vertex {v} without a unique off-path edge")
        labels[edge(v, offs[0])] = p.k2 - t + 1
        order.append(v)
    return labels, tuple(order)


def label_heavy_edges(
    c: Caterpillar,
    d: PathDecomposition,
    p: LabelPartition,
    classes: dict[int, VertexClass],
    dirs: tuple[bool, ...],
    path_labels: dict[Edge, int],
    nonpath_arcs: dict[Edge, Arc],
    light_labels: dict[Edge, int],
    rng: random.Random,
) -> tuple[dict[Edge, int], dict[Edge, int], tuple[int, ...], dict[int, int]]:
    """Step 7, in two phases over the pool [k1+1, k2 - n_l].

    Phase 1: every heavy vertex with two or more heavy edges labels all but one
    of them with random pool labels; the edge whose leaf has the largest vertex
    id is the one deferred. Phase 2: vertices left with a single unlabeled edge
    are ordered by nondecreasing partial weight (ties by path index) and the
    t-th one receives the t-th smallest remaining label.
    """
    n_l = len(light_labels)
    pool = list(range(p.k1 + 1, p.k2 - n_l + 1))
    heavy_edges_of: dict[int, list[Edge]] = {}
    index_of = {v: i for i, v in enumerate(d.path)}
    for e in d.nonpath_edges:
        if e in light_labels:
            continue
        a, b = e
        u = a if a in index_of else b
        heavy_edges_of.setdefault(u, []).append(e)
    if sum(len(es) for es in heavy_edges_of.values()) != len(pool):
        raise InvariantViolation("heavy-edge count disagrees with the unused label pool")

    shuffled = list(pool)
    rng.shuffle(shuffled)
    phase1: dict[Edge, int] = {}
    deferred: dict[int, Edge] = {}
    for u in sorted(heavy_edges_of, key=index_of.__getitem__):
        # The off-path endpoint identifies each heavy edge uniquely.
        es = sorted(heavy_edges_of[u], key=lambda e: e[0] + e[1] - u)
        deferred[u] = es[-1]
        for e in es[:-1]:
            phase1[e] = shuffled.pop()

    partial: dict[int, int] = {}
    for u in deferred:
        s = path_oriented_sum(d, dirs, path_labels, index_of[u])
        for e in heavy_edges_of[u]:
            if e in phase1:
                tail, head = nonpath_arcs[e]
                s += phase1[e] if head == u else -phase1[e]
        partial[u] = abs(s)

    ordered = sorted(deferred, key=lambda u: (partial[u], index_of[u]))
    phase2: dict[Edge, int] = {}
    for u, lbl in zip(ordered, sorted(shuffled)):
        phase2[deferred[u]] = lbl
    labels = dict(phase1)
    labels.update(phase2)
    return labels, phase1, tuple(ordered), partial


def construct(c: Caterpillar, seed: int = 0) -> tuple[OrientedLabeling, ConstructionTrace]:
    """Run all seven steps and return the oriented labeling with its trace."""
    p = compute_label_partition(c.m, c.r)
    d = longest_path_decomposition(c)
    path_labels = label_path_edges(d, p)
    classes = classify_vertices(c, d, path_labels)
    dirs = orient_path(d, classes)
    nonpath_arcs = orient_nonpath_edges(c, d, classes, dirs, path_labels)
    light_labels, light_order = label_light_edges(c, d, p, classes, dirs, path_labels)
    rng = random.Random(seed)
    heavy_labels, phase1, heavy_order, partial = label_heavy_edges(
        c, d, p, classes, dirs, path_labels, nonpath_arcs, light_labels, rng
    )

    arcs: list[Arc] = []
    labels: list[int] = []
    for i, e in enumerate(d.path_edges):
        u, v = d.path[i], d.path[i + 1]
        arcs.append((u, v) if dirs[i] else (v, u))
        labels.append(path_labels[e])
    for e in sorted(d.nonpath_edges):
        arcs.append(nonpath_arcs[e])
        labels.append(light_labels.get(e, heavy_labels.get(e, 0)))
    if 0 in labels:
        raise InvariantViolation("an off-path edge was never labeled")

    ol = OrientedLabeling(n=c.tree.n, arcs=tuple(arcs), labels=tuple(labels))
    trace = ConstructionTrace(
        partition=p,
        decomposition=d,
        classes=classes,
        path_arc_directions=dirs,
        light_order=light_order,
        heavy_phase1_assignments=phase1,
        heavy_order=heavy_order,
        partial_weights=partial,
    )
    return ol, trace
