"""Independent ground-truth machinery for the test suite.

``build_instance`` assembles a matrix directly from a recipe of edge
columns, so the generating factorization is known exactly.
``random_instance`` draws seeded recipes over the supported graph shapes;
when a singular comparison matrix is requested, each edge column is made
orthogonal (after a sign flip) to one fixed positive vector, which forces
the singularity structurally instead of numerically.
``brute_force_cycle_roots`` re-derives cycle factorization counts by dense
sampling plus bisection, never through the closed-form quadratic.

The generator's randomness is a 64-bit linear congruential generator with
Knuth's MMIX constants (a = 6364136223846793005, c = 1442695040888963407,
mod 2^64); uniform doubles take the top 53 bits.  Golden files produced
from a seed are therefore portable across platforms and runtimes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .factorizer import CPFactorization
from .graph_analysis import ShapeKind, SimpleGraph, classify_shape, graph_of_matrix
from .matrix_core import (
    DEFAULT_TOL,
    Tolerance,
    comparison_matrix,
    jacobi_eigh,
    scale_of,
)

_LCG_MULT = 6364136223846793005
_LCG_ADD = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


class Lcg:
    """Deterministic 64-bit LCG; the only randomness source in this module."""

    def __init__(self, seed: int):
        self.state = (int(seed) ^ 0x9E3779B97F4A7C15) & _LCG_MASK
        self.next_u64()  # decorrelate small seeds

    def next_u64(self) -> int:
        self.state = (self.state * _LCG_MULT + _LCG_ADD) & _LCG_MASK
        return self.state

    def u01(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.u01()

    def randint(self, n: int) -> int:
        return min(int(self.u01() * n), n - 1)


@dataclass(frozen=True)
class InstanceRecipe:
    """Ground-truth build plan: one (s, t) column per sorted edge (s at the
    lower vertex), plus optional single-vertex columns."""

    graph: SimpleGraph
    column_values: tuple
    singleton_columns: tuple = field(default_factory=tuple)


def build_instance(recipe: InstanceRecipe):
    """Assemble (A, generating factorization) from a recipe."""
    g = recipe.graph
    edges = sorted(g.edges)
    if len(edges) != len(recipe.column_values):
        raise ValueError("one (s, t) pair per edge is required")
    cols = []
    for (p, q), (s, t) in zip(edges, recipe.column_values):
        if s <= 0.0 or t <= 0.0:
            raise ValueError("edge column values must be positive")
        col = np.zeros(g.n)
        col[p] = s
        col[q] = t
        cols.append(col)
    for v, value in recipe.singleton_columns:
        col = np.zeros(g.n)
        col[v] = value
        cols.append(col)
    f = CPFactorization.from_columns(cols, n=g.n)
    return f.gram(), f


def _random_tree(rng: Lcg, n: int) -> SimpleGraph:
    edges = [(rng.randint(v), v) for v in range(1, n)]
    return SimpleGraph.from_edges(n, edges)


def _cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _random_unicyclic(rng: Lcg, n: int) -> SimpleGraph:
    k = 4 + rng.randint(n - 4)  # cycle length in 4..n-1, leaving a pendant
    edges = [(i, (i + 1) % k) for i in range(k)]
    for v in range(k, n):
        edges.append((rng.randint(v), v))
    return SimpleGraph.from_edges(n, edges)


def _random_triangle_free_general(rng: Lcg, n: int) -> SimpleGraph:
    """Random connected triangle-free graph with more edges than vertices
    wherever the size admits one."""
    g = _random_tree(rng, n)
    edges = set(g.edges)
    nbrs = g.neighbor_sets()
    target_extra = 2 + rng.randint(max(n - 3, 1))
    added = 0
    for _ in range(50 * n):
        if added >= target_extra:
            break
        i = rng.randint(n)
        j = rng.randint(n)
        if i == j:
            continue
        e = (min(i, j), max(i, j))
        if e in edges or (nbrs[i] & nbrs[j]):
            continue
        edges.add(e)
        nbrs[i].add(j)
        nbrs[j].add(i)
        added += 1
    return SimpleGraph.from_edges(n, sorted(edges))


_MIN_N = {
    ShapeKind.TREE: 1,  # a lone vertex is a tree; its instance is diagonal
    ShapeKind.SINGLE_CYCLE: 4,
    ShapeKind.UNICYCLIC: 5,
    ShapeKind.TRIANGLE_FREE_GENERAL: 5,
}


def random_instance(seed: int, shape_kind: ShapeKind, n: int, singular_m: bool,
                    tol: Tolerance = DEFAULT_TOL) -> InstanceRecipe:
    """Seeded recipe of the requested shape.

    With ``singular_m`` true the comparison matrix of the built instance is
    singular by construction (every flipped edge column is orthogonal to
    one positive vector).  With it false the recipe is re-drawn, still
    deterministically, until the comparison matrix is safely nonsingular;
    tree shapes get one singleton column, since a bare tree of edge columns
    is always singular.
    """
    if shape_kind not in _MIN_N:
        raise ValueError(f"unsupported shape {shape_kind}")
    if n < _MIN_N[shape_kind]:
        raise ValueError(f"{shape_kind.value} needs n >= {_MIN_N[shape_kind]}")
    rng = Lcg(seed * 1_000_003 + n)
    for _ in range(100):
        if shape_kind is ShapeKind.TREE:
            g = _random_tree(rng, n)
        elif shape_kind is ShapeKind.SINGLE_CYCLE:
            g = _cycle_graph(n)
        elif shape_kind is ShapeKind.UNICYCLIC:
            g = _random_unicyclic(rng, n)
        else:
            g = _random_triangle_free_general(rng, n)
        edges = sorted(g.edges)
        if singular_m:
            v = np.array([rng.uniform(0.5, 2.0) for _ in range(n)])
            values = []
            for p, q in edges:
                c = rng.uniform(0.5, 2.0)
                values.append((c * v[q], c * v[p]))
            recipe = InstanceRecipe(g, tuple(values), ())
            return recipe
        values = tuple(
            (rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)) for _ in edges
        )
        singles = ()
        if shape_kind is ShapeKind.TREE:
            singles = ((rng.randint(n), rng.uniform(0.5, 2.0)),)
        recipe = InstanceRecipe(g, values, singles)
        a, _ = build_instance(recipe)
        m = comparison_matrix(a)
        vals, _ = jacobi_eigh(m, tol)
        if float(np.min(np.abs(vals))) > 10.0 * tol.sing * scale_of(m):
            return recipe
    raise RuntimeError("could not draw a safely nonsingular instance")


def brute_force_cycle_roots(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> list:
    """Roots of f(t) = det of the 2x2 Schur complement of the cycle
    remainder, located by sampling 10^4 log-spaced points on
    (a_11 * 1e-6, a_11] and bisecting sign changes to 1e-12; a tangency
    (double root) is declared when |f| dips below tolerance with no sign
    change.  Used to cross-validate the closed-form quadratic route."""
    a = np.asarray(a, dtype=float)
    shape = classify_shape(graph_of_matrix(a, tol))
    if shape.kind is not ShapeKind.SINGLE_CYCLE:
        raise ValueError("expected a single-cycle graph")
    n = a.shape[0]
    perm = np.empty(n, dtype=int)
    for pos, v in enumerate(shape.cycle_vertices):
        perm[v] = pos
    inv = np.argsort(perm)
    ap = a[np.ix_(inv, inv)]

    h1 = ap[0, 1]
    rest = np.arange(2, n)
    kinv = np.linalg.inv(ap[np.ix_(rest, rest)])
    coupling = ap[np.ix_(rest, np.array([0, 1]))]
    k2 = coupling.T @ kinv @ coupling

    def f(t):
        return (ap[0, 0] - k2[0, 0] - t) * (ap[1, 1] - k2[1, 1] - h1 * h1 / t) - k2[0, 1] ** 2

    a11 = ap[0, 0]
    ts = a11 * np.logspace(-6.0, 0.0, 10_000)
    fs = f(ts)

    roots = []
    for i in np.flatnonzero(fs[:-1] * fs[1:] < 0.0):
        lo, hi = float(ts[i]), float(ts[i + 1])
        flo = f(lo)
        while hi - lo > 1e-12:
            mid = 0.5 * (lo + hi)
            fmid = f(mid)
            if flo * fmid <= 0.0:
                hi = mid
            else:
                lo, flo = mid, fmid
        roots.append(0.5 * (lo + hi))
    if not roots:
        i = int(np.argmin(np.abs(fs)))
        if abs(fs[i]) < tol.sing * (1.0 + float(np.max(np.abs(fs)))):
            lo = float(ts[max(i - 1, 0)])
            hi = float(ts[min(i + 1, len(ts) - 1)])
            for _ in range(200):  # ternary search on |f| around the tangency
                m1 = lo + (hi - lo) / 3.0
                m2 = hi - (hi - lo) / 3.0
                if abs(f(m1)) < abs(f(m2)):
                    hi = m2
                else:
                    lo = m1
            roots.append(0.5 * (lo + hi))
    return sorted(roots)
