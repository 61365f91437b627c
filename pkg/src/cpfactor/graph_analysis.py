"""The graph of a symmetric matrix and the shape questions that drive
factorization dispatch: triangle-freeness, tree / cycle / unicyclic
classification, bipartitions, pendant vertices, non-bridge edges.

All tie-breaking is lowest-index / lowest-lexicographic so repeated runs
produce identical answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .matrix_core import DEFAULT_TOL, Tolerance, scale_of


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1; edges are (i, j), i < j."""

    n: int
    edges: frozenset

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        normalized = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            normalized.add((min(i, j), max(i, j)))
        return cls(n=n, edges=frozenset(normalized))

    def neighbor_sets(self) -> list:
        nbrs = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return nbrs

    def without_edge(self, edge) -> "SimpleGraph":
        e = (min(edge), max(edge))
        if e not in self.edges:
            raise ValueError(f"edge {e} not present")
        return SimpleGraph(self.n, self.edges - {e})


class ShapeKind(str, Enum):
    TREE = "tree"
    SINGLE_CYCLE = "single_cycle"
    UNICYCLIC = "unicyclic"
    TRIANGLE_FREE_GENERAL = "triangle_free_general"
    HAS_TRIANGLE = "has_triangle"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class GraphShape:
    kind: ShapeKind
    cycle_vertices: tuple | None = None
    bipartition: tuple | None = None


def graph_of_matrix(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> SimpleGraph:
    """Edge {i, j} present iff |a_ij| > tol.sing * scale_of(a)."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    thresh = tol.sing * scale_of(a)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if abs(a[i, j]) > thresh
    ]
    return SimpleGraph.from_edges(n, edges)


def is_triangle_free(g: SimpleGraph) -> bool:
    nbrs = g.neighbor_sets()
    return not any(nbrs[i] & nbrs[j] for i, j in g.edges)


def connected_components(g: SimpleGraph) -> list:
    """Vertex sets of the connected components, each sorted, ordered by
    smallest member."""
    nbrs = g.neighbor_sets()
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [root]
        seen[root] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SimpleGraph) -> bool:
    return len(connected_components(g)) == 1


def _two_coloring(g: SimpleGraph):
    """(part0, part1) frozensets from BFS 2-coloring, or None if an odd
    cycle exists.  Each component's lowest vertex lands in part0."""
    nbrs = g.neighbor_sets()
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in nbrs[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    part0 = frozenset(v for v in range(g.n) if color[v] == 0)
    part1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return (part0, part1)


def _cycle_core_order(g: SimpleGraph) -> tuple:
    """Vertices of the unique cycle of a connected graph with |E| = n,
    in walk order starting at the lowest core vertex."""
    nbrs = g.neighbor_sets()
    alive = set(range(g.n))
    degrees = {v: len(nbrs[v]) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if degrees[v] <= 1:
                alive.discard(v)
                for w in nbrs[v]:
                    if w in alive:
                        degrees[w] -= 1
                degrees[v] = 0
                changed = True
    start = min(alive)
    order = [start]
    prev = None
    current = start
    while True:
        nxt = min(w for w in nbrs[current] if w in alive and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, current = current, nxt
    return tuple(order)


def classify_shape(g: SimpleGraph) -> GraphShape:
    """Dispatch shape for the factorization theory.

    Precedence: Disconnected, then HasTriangle, then tree / single-cycle /
    unicyclic / general triangle-free by edge count.  A lone vertex counts
    as a tree with no edges.
    """
    bipartition = _two_coloring(g)
    if not is_connected(g):
        return GraphShape(ShapeKind.DISCONNECTED, None, bipartition)
    if not is_triangle_free(g):
        return GraphShape(ShapeKind.HAS_TRIANGLE, None, bipartition)
    m = len(g.edges)
    if m == g.n - 1:
        return GraphShape(ShapeKind.TREE, None, bipartition)
    if m == g.n:
        degrees = [len(s) for s in g.neighbor_sets()]
        kind = ShapeKind.SINGLE_CYCLE if all(d == 2 for d in degrees) else ShapeKind.UNICYCLIC
        return GraphShape(kind, _cycle_core_order(g), bipartition)
    return GraphShape(ShapeKind.TRIANGLE_FREE_GENERAL, None, bipartition)


def pendant_vertices(g: SimpleGraph) -> list:
    """Vertices of degree exactly one, ascending."""
    return [v for v, s in enumerate(g.neighbor_sets()) if len(s) == 1]


def find_non_bridge_edge(g: SimpleGraph):
    """Lowest-lexicographic edge lying on a cycle, or None for a tree.

    An edge lies on a cycle exactly when deleting it keeps the graph
    connected; the graph must be connected to begin with.
    """
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    for edge in sorted(g.edges):
        if is_connected(g.without_edge(edge)):
            return edge
    return None
