"""Complete-positivity decision and factorization-count census for
matrices with triangle-free graphs (plus the rank-1 / rank-2 shortcuts
that hold for any graph).

For a symmetric nonnegative matrix with a triangle-free graph, complete
positivity is equivalent to the comparison matrix being positive
semidefinite; with that settled, the number of factorizations is decided
by whether the comparison matrix is singular and by the graph shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InapplicableMatrixError, ToleranceBreakdownError
from .factorizer import (
    CPFactorization,
    RotationFamily,
    cycle_factorize,
    rank2_factorize,
    rotation_family_sample,
    tree_two_witnesses,
    two_factorizations_general,
    unicyclic_factorize,
    unique_factorization_null_vector,
    verify_factorization,
)
from .graph_analysis import (
    ShapeKind,
    classify_shape,
    graph_of_matrix,
    is_connected,
    is_triangle_free,
)
from .matrix_core import (
    DEFAULT_TOL,
    Tolerance,
    comparison_matrix,
    is_psd,
    min_eig_pair,
    rank_with_tol,
    scale_of,
)


class MinimalCount(str, Enum):
    EXACTLY_ONE = "exactly_one"
    EXACTLY_TWO = "exactly_two"
    AT_LEAST_TWO = "at_least_two"
    INFINITELY_MANY = "infinitely_many"


class TotalCount(str, Enum):
    EXACTLY_ONE = "exactly_one"
    AT_LEAST_TWO_FINITE_POSSIBLE = "at_least_two_finite_possible"
    INFINITELY_MANY = "infinitely_many"


@dataclass(frozen=True, eq=False)
class FactorizationCensus:
    """How many minimal / total CP factorizations a matrix has, which rule
    decided it, and witnesses that reconstruct the input."""

    minimal_count: MinimalCount
    total_count: TotalCount
    cp_rank: int
    basis_theorem: str
    margin_warning: bool
    witnesses: tuple


def is_cp_triangle_free(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Complete positivity for a symmetric nonnegative matrix whose graph
    is triangle free: true iff the comparison matrix is PSD."""
    a = np.asarray(a, dtype=float)
    if float(a.min()) < -tol.sing * scale_of(a):
        raise InapplicableMatrixError("matrix has negative entries; not nonnegative")
    g = graph_of_matrix(a, tol)
    if not is_triangle_free(g):
        raise InapplicableMatrixError(
            "graph has a triangle; the comparison-matrix criterion is inapplicable"
        )
    return is_psd(comparison_matrix(a), tol)


def cp_rank_triangle_free(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> int:
    """cp-rank of a connected triangle-free CP matrix: the edge count, or
    the rank when the graph is a tree."""
    a = np.asarray(a, dtype=float)
    g = graph_of_matrix(a, tol)
    if not is_connected(g):
        raise InapplicableMatrixError("graph must be connected")
    if not is_cp_triangle_free(a, tol):
        raise InapplicableMatrixError("matrix is not completely positive")
    if classify_shape(g).kind is ShapeKind.TREE:
        return rank_with_tol(a, tol)
    return len(g.edges)


def signature_similarity_check(a: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """For a connected bipartite-graph matrix, the +/-1 vector s (positive
    on the part holding vertex 0) with diag(s) M(A) diag(s) = A entrywise.
    Returns None when the graph is not bipartite."""
    a = np.asarray(a, dtype=float)
    g = graph_of_matrix(a, tol)
    if not is_connected(g):
        raise InapplicableMatrixError("graph must be connected")
    shape = classify_shape(g)
    if shape.bipartition is None:
        return None
    part0, _ = shape.bipartition
    s = np.array([1.0 if v in part0 else -1.0 for v in range(g.n)])
    m = comparison_matrix(a)
    if float(np.max(np.abs(np.outer(s, s) * m - a))) > tol.sing * scale_of(a):
        return None
    return s


def _margin_flag(lam_min: float, mscale: float, tol: Tolerance) -> bool:
    mag = abs(lam_min)
    return 0.1 * tol.sing * mscale <= mag <= 10.0 * tol.sing * mscale


def classify_factorization_count(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> FactorizationCensus:
    """Census of CP factorizations of an irreducible matrix.

    Dispatch: rank 0/1/2 shortcuts first (any graph), then the
    triangle-free machinery keyed on singularity of the comparison matrix
    and the graph shape.  Counts are only ever asserted where a theorem
    backs them: exactly-two only for one-cycle graphs, infinitely-many
    totals only for trees, bipartite graphs and nested-support rank-2.
    """
    a = np.asarray(a, dtype=float)
    if float(a.min()) < -tol.sing * scale_of(a):
        raise InapplicableMatrixError("matrix has negative entries; not nonnegative")
    g = graph_of_matrix(a, tol)
    if not is_connected(g):
        raise InapplicableMatrixError(
            "matrix is reducible; classify each connected component separately "
            "(counts multiply across direct summands)"
        )
    rank = rank_with_tol(a, tol)

    if rank == 0:
        empty = CPFactorization.from_columns([], n=g.n)
        return FactorizationCensus(
            MinimalCount.EXACTLY_ONE, TotalCount.EXACTLY_ONE, 0,
            "zero-matrix", False, (empty,),
        )

    if rank == 1:
        i = int(np.argmax(np.diagonal(a)))
        col = a[:, i] / np.sqrt(a[i, i])
        witness = CPFactorization.from_columns([col], n=g.n)
        if verify_factorization(a, witness, tol) > tol.sing * scale_of(a):
            raise InapplicableMatrixError("rank-1 matrix is not positive semidefinite")
        return FactorizationCensus(
            MinimalCount.EXACTLY_ONE, TotalCount.EXACTLY_ONE, 1,
            "rank-1-unique", False, (witness,),
        )

    if rank == 2:
        out = rank2_factorize(a, tol)
        if isinstance(out, CPFactorization):
            return FactorizationCensus(
                MinimalCount.EXACTLY_ONE, TotalCount.EXACTLY_ONE, 2,
                "rank-2-forced-pair", False, (out,),
            )
        assert isinstance(out, RotationFamily)
        lo, hi = out.theta_range
        second = rotation_family_sample(out, lo if abs(lo) >= abs(hi) else hi, tol)
        return FactorizationCensus(
            MinimalCount.INFINITELY_MANY, TotalCount.INFINITELY_MANY, 2,
            "rank-2-rotation-family", False, (out.base, second),
        )

    if not is_triangle_free(g):
        raise InapplicableMatrixError(
            "graph has a triangle and rank exceeds 2; census undecidable here"
        )
    m = comparison_matrix(a)
    pair = min_eig_pair(m, tol)
    mscale = scale_of(m)
    if pair.value < -tol.sing * mscale:
        raise InapplicableMatrixError("not completely positive (comparison matrix not PSD)")
    margin = _margin_flag(pair.value, mscale, tol)
    shape = classify_shape(g)
    edges = len(g.edges)

    if abs(pair.value) <= tol.sing * mscale:
        witness = unique_factorization_null_vector(a, tol)
        return FactorizationCensus(
            MinimalCount.EXACTLY_ONE, TotalCount.EXACTLY_ONE, edges,
            "singular-comparison-unique", margin, (witness,),
        )

    bipartite = shape.bipartition is not None
    if shape.kind is ShapeKind.TREE:
        w0, w1, _ = tree_two_witnesses(a, tol)
        return FactorizationCensus(
            MinimalCount.INFINITELY_MANY, TotalCount.INFINITELY_MANY, rank,
            "nonsingular-tree-two-witness-family", margin, (w0, w1),
        )
    if shape.kind in (ShapeKind.SINGLE_CYCLE, ShapeKind.UNICYCLIC):
        results = (
            cycle_factorize(a, tol)
            if shape.kind is ShapeKind.SINGLE_CYCLE
            else unicyclic_factorize(a, tol)
        )
        if len(results) != 2:
            raise ToleranceBreakdownError(
                "nonsingular comparison matrix but the cycle quadratic gave "
                f"{len(results)} admissible root(s); near-threshold input"
            )
        total = TotalCount.INFINITELY_MANY if bipartite else TotalCount.AT_LEAST_TWO_FINITE_POSSIBLE
        tag = (
            "cycle-quadratic-roots"
            if shape.kind is ShapeKind.SINGLE_CYCLE
            else "unicyclic-pendant-reduction"
        )
        return FactorizationCensus(
            MinimalCount.EXACTLY_TWO, total, edges, tag, margin, tuple(results)
        )
    w0, w1 = two_factorizations_general(a, tol)
    total = TotalCount.INFINITELY_MANY if bipartite else TotalCount.AT_LEAST_TWO_FINITE_POSSIBLE
    return FactorizationCensus(
        MinimalCount.AT_LEAST_TWO, total, edges,
        "edge-removal-two-witnesses", margin, (w0, w1),
    )
