"""Tree / caterpillar data model shared by construction, verification and search.

A caterpillar is kept in a canonical form: the spine vertices come first
(numbered left to right), then the leaves, grouped by the spine vertex they
attach to. All iteration orders derive from this numbering, so every run over
the same instance is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional

Edge = tuple[int, int]  # unordered pair, stored as (min, max)
Arc = tuple[int, int]   # ordered pair (tail, head)


class InputError(ValueError):
    """Invalid caller-supplied input (malformed graph, labels, or flags)."""


class InvariantViolation(RuntimeError):
    """An internal guarantee of the construction was broken: implementation bug."""


class ResourceLimitError(RuntimeError):
    """Refusal to run a search whose size exceeds the configured cap."""


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    """Undirected tree on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError("tree must have at least one vertex")
        normalized = tuple(sorted(edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "edges", normalized)
        if len(normalized) != self.n - 1:
            raise InputError(f"tree on {self.n} vertices needs {self.n - 1} edges, got {len(normalized)}")
        if len(set(normalized)) != len(normalized):
            raise InputError("parallel edges are not allowed")
        for u, v in normalized:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u},{v}) out of range for n={self.n}")
        if not self._connected():
            raise InputError("edge set is not connected")

    def _connected(self) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(self.n)}) == 1

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in adj)


def degree(t: Tree, v: int) -> int:
    if not 0 <= v < t.n:
        raise InputError(f"vertex {v} out of range for n={t.n}")
    return len(t.adjacency[v])


def leaves(t: Tree) -> set[int]:
    """All vertices of degree one."""
    return {v for v in range(t.n) if len(t.adjacency[v]) == 1}


@dataclass(frozen=True)
class Caterpillar:
    """Canonical caterpillar: spine vertices 0..s-1, then leaves in spine order."""

    tree: Tree
    spine: tuple[int, ...]
    leaf_counts: tuple[int, ...]
    m: int  # edge count
    r: int  # leaf count

    def leaves_at(self, spine_index: int) -> range:
        """Vertex ids of the leaves attached to the given spine vertex."""
        s = len(self.spine)
        start = s + sum(self.leaf_counts[:spine_index])
        return range(start, start + self.leaf_counts[spine_index])


def parse_caterpillar(leaf_counts: list[int] | tuple[int, ...]) -> Caterpillar:
    """Build the canonical caterpillar for a leaf-count sequence.

    Spine vertices are numbered 0..s-1 left to right; leaf i of spine vertex j
    gets the next id after all leaves of spine vertices < j.
    """
    counts = tuple(int(c) for c in leaf_counts)
    if not counts:
        raise InputError("empty leaf-count sequence")
    if any(c < 0 for c in counts):
        raise InputError("leaf counts must be nonnegative")
    s = len(counts)
    if s == 1:
        if counts[0] < 2:
            raise InputError("non-canonical caterpillar: single spine vertex needs at least 2 leaves")
    else:
        if counts[0] < 1 or counts[-1] < 1:
            raise InputError("non-canonical caterpillar: end spine vertices need at least 1 leaf")
    edges: list[Edge] = [(i, i + 1) for i in range(s - 1)]
    next_id = s
    for i, c in enumerate(counts):
        for _ in range(c):
            edges.append(edge(i, next_id))
            next_id += 1
    tree = Tree(n=next_id, edges=tuple(edges))
    return Caterpillar(
        tree=tree,
        spine=tuple(range(s)),
        leaf_counts=counts,
        m=tree.n - 1,
        r=sum(counts),
    )


def is_caterpillar(t: Tree) -> Optional[Caterpillar]:
    """Return the canonical relabeling if deleting all leaves of t yields a path.

    Trees of order < 3 are rejected. The returned caterpillar uses canonical
    vertex numbering, which generally differs from t's own.
    """
    if t.n < 3:
        return None
    leaf_set = leaves(t)
    interior = [v for v in range(t.n) if v not in leaf_set]
    # Any tree of order >= 3 has an interior vertex.
    inner_adj = {v: [w for w in t.adjacency[v] if w not in leaf_set] for v in interior}
    if any(len(ns) > 2 for ns in inner_adj.values()):
        return None
    endpoints = [v for v in interior if len(inner_adj[v]) <= 1]
    # A path has exactly two interior-degree-<=1 vertices (or one, if trivial).
    if len(interior) == 1:
        spine_order = interior
    else:
        if len(endpoints) != 2:
            return None
        spine_order = [min(endpoints)]
        prev = -1
        while True:
            nxt = [w for w in inner_adj[spine_order[-1]] if w != prev]
            if not nxt:
                break
            prev = spine_order[-1]
            spine_order.append(nxt[0])
        if len(spine_order) != len(interior):
            return None  # interior not connected as a single path
    counts = tuple(sum(1 for w in t.adjacency[v] if w in leaf_set) for v in spine_order)
    canonical = min(counts, counts[::-1])
    return parse_caterpillar(canonical)


@dataclass(frozen=True)
class PathDecomposition:
    """Even-length initial segment of a longest path, plus the leftover edges."""

    path: tuple[int, ...]            # u_0 .. u_k
    k: int                           # number of path edges, always even
    path_edges: tuple[Edge, ...]     # in path order
    nonpath_edges: frozenset[Edge]
    trimmed_tail: Optional[int]      # the dropped endpoint when m - r is odd

    def path_index(self, v: int) -> int:
        return self.path.index(v)


def longest_path_decomposition(c: Caterpillar) -> PathDecomposition:
    """Pick a longest path (leaf, spine, leaf) and trim it to even length.

    When several longest paths exist the leaf with the smallest vertex id is
    taken at each end. If m - r is odd the last path edge is reclassified as a
    non-path edge and the dropped endpoint is recorded as trimmed_tail.
    """
    s = len(c.spine)
    if s == 1:
        first, second = c.leaves_at(0)[0], c.leaves_at(0)[1]
        full = (first, c.spine[0], second)
    else:
        full = (c.leaves_at(0)[0],) + c.spine + (c.leaves_at(s - 1)[0],)
    if len(full) - 1 != c.m - c.r + 2:
        raise InvariantViolation("longest path length disagrees with m - r + 2")
    if (c.m - c.r) % 2 == 0:
        k = c.m - c.r + 2
        trimmed = None
    else:
        k = c.m - c.r + 1
        trimmed = full[-1]
    path = full[: k + 1]
    path_edges = tuple(edge(path[i], path[i + 1]) for i in range(k))
    nonpath = frozenset(c.tree.edges) - frozenset(path_edges)
    return PathDecomposition(
        path=path, k=k, path_edges=path_edges, nonpath_edges=nonpath, trimmed_tail=trimmed
    )


@dataclass(frozen=True)
class LabelPartition:
    """Split of the label set [1, m] into L1 = [1,k1], L2 = (k1,k2], L3 = (k2,m]."""

    m: int
    k1: int
    k2: int

    @property
    def L1(self) -> range:
        return range(1, self.k1 + 1)

    @property
    def L2(self) -> range:
        return range(self.k1 + 1, self.k2 + 1)

    @property
    def L3(self) -> range:
        return range(self.k2 + 1, self.m + 1)


class VertexClass(Enum):
    LIGHT = "light"
    HEAVY = "heavy"
    PATH_END_LEAF = "path_end_leaf"
    NON_PATH_LEAF = "leaf"


@dataclass(frozen=True)
class OrientedLabeling:
    """An orientation of a tree plus a bijection from its arcs to [1, m]."""

    n: int
    arcs: tuple[Arc, ...]
    labels: tuple[int, ...]  # labels[i] belongs to arcs[i]

    def __post_init__(self) -> None:
        m = len(self.arcs)
        if len(self.labels) != m:
            raise InputError("one label per arc required")
        if sorted(self.labels) != list(range(1, m + 1)):
            raise InputError("labels are not a bijection onto [1, m]")
        pairs = {edge(u, v) for u, v in self.arcs}
        if len(pairs) != m:
            raise InputError("arcs contain a repeated vertex pair")
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"arc ({u},{v}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def undirected_edges(self) -> frozenset[Edge]:
        return frozenset(edge(u, v) for u, v in self.arcs)


def parse_leaf_counts(line: str) -> tuple[int, ...]:
    """Parse one line of the canonical text format: whitespace-separated counts."""
    try:
        return tuple(int(tok) for tok in line.split())
    except ValueError as exc:
        raise InputError(f"bad leaf-count line {line!r}") from exc


def format_leaf_counts(c: Caterpillar) -> str:
    return " ".join(str(x) for x in c.leaf_counts)
