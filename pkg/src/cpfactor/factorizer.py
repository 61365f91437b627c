"""Constructions of CP factorizations.

A CP factorization collects nonnegative columns b_i with
A = sum_i b_i b_i^T.  For a matrix with a triangle-free graph every
column's support fits inside an edge, which makes the following routes
constructive:

* ``unique_factorization_null_vector`` reads the single possible
  factorization off the positive null vector of a singular comparison
  matrix.
* ``tree_factorize_singular`` peels pendant vertices of a singular tree
  matrix; each pendant forces its column.
* ``tree_two_witnesses`` produces two distinct factorizations of a
  nonsingular tree matrix by splitting off a diagonal spike at each of two
  vertices, plus the plane-rotation family that turns the pair into
  infinitely many.
* ``cycle_factorize`` enumerates the one or two factorizations of a cycle
  matrix via the quadratic satisfied by the first column's corner value.
* ``unicyclic_factorize`` peels pendants down to the cycle core.
* ``two_factorizations_general`` handles any triangle-free graph with a
  nonsingular comparison matrix by scaling to strict diagonal dominance and
  removing non-bridge edges until a tree remains.
* ``rank2_factorize`` treats rank-2 matrices of any graph: a forced pair
  when a qualifying zero entry exists, otherwise a rotation family.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import InapplicableMatrixError, ToleranceBreakdownError
from .graph_analysis import (
    ShapeKind,
    SimpleGraph,
    classify_shape,
    find_non_bridge_edge,
    graph_of_matrix,
    is_connected,
    is_triangle_free,
)
from .matrix_core import (
    DEFAULT_TOL,
    Tolerance,
    comparison_matrix,
    is_psd,
    jacobi_eigh,
    min_eig_pair,
    rank_with_tol,
    scale_diag,
    scale_of,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CPFactorization:
    """Ordered nonnegative columns; ``factor[:, j]`` is the j-th column."""

    factor: np.ndarray

    def __post_init__(self):
        f = np.asarray(self.factor, dtype=float)
        if f.ndim != 2:
            raise ValueError("factor must be a 2-d array of columns")
        object.__setattr__(self, "factor", f)

    @classmethod
    def from_columns(cls, columns, n: int | None = None) -> "CPFactorization":
        columns = [np.asarray(c, dtype=float) for c in columns]
        if not columns:
            if n is None:
                raise ValueError("empty factorization needs an explicit dimension")
            return cls(np.zeros((n, 0)))
        return cls(np.column_stack(columns))

    @property
    def n(self) -> int:
        return self.factor.shape[0]

    @property
    def num_columns(self) -> int:
        return self.factor.shape[1]

    @property
    def columns(self) -> list:
        return [self.factor[:, j].copy() for j in range(self.num_columns)]

    def gram(self) -> np.ndarray:
        return self.factor @ self.factor.T


@dataclass(frozen=True, eq=False)
class RotationFamily:
    """A one-parameter family of factorizations: rotating the pivot column
    pair by any angle in ``theta_range`` keeps all entries nonnegative and
    leaves the reconstructed matrix unchanged.

    ``pivot_pair = (i, j)`` with the support of column j contained in the
    support of column i.  Angle 0 gives back ``base``; when the supports
    nest strictly, 0 sits at one endpoint of the range, otherwise in its
    interior.
    """

    base: CPFactorization
    pivot_pair: tuple
    theta_range: tuple


def verify_factorization(a: np.ndarray, f: CPFactorization, tol: Tolerance = DEFAULT_TOL) -> float:
    """Max-abs reconstruction residual ``|A - sum b_i b_i^T|``.

    Raises ``ValueError`` when a column entry is negative beyond tolerance;
    the caller compares the returned residual against
    ``tol.sing * scale_of(A)``.
    """
    a = np.asarray(a, dtype=float)
    if f.n != a.shape[0]:
        raise ValueError("dimension mismatch between matrix and factorization")
    if f.num_columns and float(f.factor.min()) < -tol.sing * scale_of(f.factor):
        raise ValueError("factorization has a negative column entry")
    return float(np.max(np.abs(a - f.gram())))


def canonicalize(f: CPFactorization) -> CPFactorization:
    """Columns sorted descending lexicographically.  Two factorizations are
    considered equal when their canonical forms agree entrywise.

    The primary sort key is quantized at 1e-6 relative so that independent
    construction routes, which agree only up to roundoff, order near-tied
    columns identically; exact values break remaining ties.
    """
    if f.num_columns == 0:
        return f
    quantum = 1e-6 * scale_of(f.factor)

    def key(j: int):
        col = f.factor[:, j]
        return (tuple(np.rint(col / quantum)), tuple(col))

    order = sorted(range(f.num_columns), key=key, reverse=True)
    return CPFactorization(f.factor[:, order])


def canonical_distance(f1: CPFactorization, f2: CPFactorization) -> float:
    """Max-abs difference of canonical forms; inf when shapes differ."""
    if f1.factor.shape != f2.factor.shape:
        return float("inf")
    if f1.num_columns == 0:
        return 0.0
    return float(np.max(np.abs(canonicalize(f1).factor - canonicalize(f2).factor)))


def pairwise_independent_columns(f: CPFactorization, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when no column is (numerically) a scalar multiple of another."""
    b = f.factor
    for i in range(f.num_columns):
        for j in range(i + 1, f.num_columns):
            x, y = b[:, i], b[:, j]
            cross = np.outer(x, y) - np.outer(y, x)
            if float(np.max(np.abs(cross))) <= tol.sing * scale_of(b) ** 2:
                return False
    return True


def _require_nonnegative(a: np.ndarray, tol: Tolerance) -> None:
    if float(a.min()) < -tol.sing * scale_of(a):
        raise InapplicableMatrixError("matrix has negative entries; not nonnegative")


def unique_factorization_null_vector(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> CPFactorization:
    """The single CP factorization of an irreducible triangle-free matrix
    whose comparison matrix is singular.

    The positive null vector v of the comparison matrix forces, for each
    edge {p, q}, the column with entries sqrt(a_pq v_q / v_p) at p and
    sqrt(a_pq v_p / v_q) at q.
    """
    a = np.asarray(a, dtype=float)
    _require_nonnegative(a, tol)
    g = graph_of_matrix(a, tol)
    if not is_connected(g):
        raise InapplicableMatrixError(
            "matrix is reducible; factor each connected component separately"
        )
    if not is_triangle_free(g):
        raise InapplicableMatrixError("graph has a triangle; construction inapplicable")
    m = comparison_matrix(a)
    pair = min_eig_pair(m, tol)
    if abs(pair.value) > tol.sing * scale_of(m):
        raise InapplicableMatrixError(
            "comparison matrix is nonsingular; the factorization is not unique "
            "(use the census)"
        )
    v = pair.vector
    if float(v.min()) <= tol.sing:
        raise ToleranceBreakdownError(
            "null vector of the comparison matrix is not strictly positive; "
            "input may be reducible at tolerance"
        )
    cols = []
    for p, q in sorted(g.edges):
        apq = max(a[p, q], 0.0)
        col = np.zeros(g.n)
        col[p] = np.sqrt(apq * v[q] / v[p])
        col[q] = np.sqrt(apq * v[p] / v[q])
        cols.append(col)
    return CPFactorization.from_columns(cols, n=g.n)


def _peel_pendants(work: np.ndarray, g: SimpleGraph, alive: set, tol: Tolerance) -> list:
    """Repeatedly strip the lowest-index pendant vertex of the live induced
    subgraph, appending its forced column.  Mutates ``work`` and ``alive``.
    Stops when no live pendant remains (a lone vertex or a cycle core)."""
    nbrs = g.neighbor_sets()
    floor = tol.sing * scale_of(work)
    cols = []
    while len(alive) > 1:
        pendant = None
        for v in sorted(alive):
            live_nbrs = [w for w in nbrs[v] if w in alive]
            if len(live_nbrs) == 1:
                pendant = (v, live_nbrs[0])
                break
        if pendant is None:
            break
        p, q = pendant
        app = work[p, p]
        if app <= floor:
            raise ToleranceBreakdownError(
                f"pendant vertex {p} has a vanishing diagonal but a live edge"
            )
        col = np.zeros(g.n)
        col[p] = np.sqrt(app)
        col[q] = work[p, q] / col[p]
        work -= np.outer(col, col)
        work[p, :] = 0.0
        work[:, p] = 0.0
        alive.discard(p)
        cols.append(col)
    return cols


def tree_factorize_singular(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> CPFactorization:
    """Unique factorization of a singular tree matrix by pendant peeling.

    Each pendant vertex is covered by exactly one edge, so its column is
    forced; subtracting it zeroes the pendant row and leaves a smaller
    singular tree matrix.  A nonsingular input leaves a positive residue at
    the last vertex and is rejected.
    """
    a = np.asarray(a, dtype=float)
    _require_nonnegative(a, tol)
    g = graph_of_matrix(a, tol)
    shape = classify_shape(g)
    if shape.kind is not ShapeKind.TREE:
        raise InapplicableMatrixError(f"graph is {shape.kind.value}, expected a tree")
    work = a.copy()
    alive = set(range(g.n))
    cols = _peel_pendants(work, g, alive, tol)
    residue = float(np.max(np.abs(work)))
    if residue > tol.sing * scale_of(a):
        raise InapplicableMatrixError(
            "matrix is nonsingular: infinitely many factorizations; "
            "use tree_two_witnesses"
        )
    return CPFactorization.from_columns(cols, n=g.n)


def rotation_family(base: CPFactorization, pivot_pair, tol: Tolerance = DEFAULT_TOL) -> RotationFamily:
    """Admissible rotation interval for a column pair with nested supports.

    Each nonzero row (x_r, y_r) of the pivot pair constrains the angle to
    an arc; the intersection over rows is the closed interval returned.
    Nested supports guarantee no two rows are orthogonal, so the interval
    is nondegenerate.
    """
    i, j = pivot_pair
    x = base.factor[:, i]
    y = base.factor[:, j]
    thresh = tol.sing * scale_of(base.factor)
    live = (x > thresh) | (y > thresh)
    if not np.any(live):
        raise ValueError("pivot columns are numerically zero")
    if np.any((y > thresh) & (x <= thresh)):
        raise ValueError("pivot supports are not nested (column j outside column i)")
    phi = np.arctan2(y[live], x[live])
    lo = float(np.max(phi) - 0.5 * np.pi)
    hi = float(np.min(phi))
    if hi - lo <= tol.sing:
        raise ValueError("two pivot rows are orthogonal; no rotation family exists")
    return RotationFamily(base=base, pivot_pair=(int(i), int(j)), theta_range=(lo, hi))


def rotation_family_sample(fam: RotationFamily, theta: float, tol: Tolerance = DEFAULT_TOL) -> CPFactorization:
    """Apply the plane rotation [cos t, -sin t; sin t, cos t] to the pivot
    pair.  The Gram matrix of the pair, hence the reconstructed matrix, is
    unchanged; entries stay nonnegative for every theta in range."""
    lo, hi = fam.theta_range
    if not (lo <= theta <= hi):
        raise ValueError(f"theta {theta} outside admissible range [{lo}, {hi}]")
    i, j = fam.pivot_pair
    x = fam.base.factor[:, i]
    y = fam.base.factor[:, j]
    c, s = float(np.cos(theta)), float(np.sin(theta))
    nx = c * x + s * y
    ny = -s * x + c * y
    dust = tol.sing * scale_of(fam.base.factor)
    if float(min(nx.min(), ny.min())) < -dust:
        raise ToleranceBreakdownError("rotated column went negative beyond tolerance")
    factor = fam.base.factor.copy()
    factor[:, i] = np.maximum(nx, 0.0)
    factor[:, j] = np.maximum(ny, 0.0)
    return CPFactorization(factor)


def tree_two_witnesses(a: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """Two distinct factorizations of a nonsingular tree matrix, plus the
    rotation family seeded on the first.

    For k in {0, 1}: subtracting delta_k = det(A)/det(A with row/col k
    deleted) from a_kk gives a singular tree matrix; its unique
    factorization plus the spike sqrt(delta_k) e_k is a factorization of A.
    The two differ in their single-vertex column.  Returns
    ``(witness0, witness1, family)``.
    """
    a = np.asarray(a, dtype=float)
    _require_nonnegative(a, tol)
    g = graph_of_matrix(a, tol)
    shape = classify_shape(g)
    if shape.kind is not ShapeKind.TREE:
        raise InapplicableMatrixError(f"graph is {shape.kind.value}, expected a tree")
    n = g.n
    if n < 2:
        raise InapplicableMatrixError("two-witness construction needs at least 2 vertices")
    if rank_with_tol(a, tol) < n:
        raise InapplicableMatrixError(
            "matrix is singular: factorization is unique; use tree_factorize_singular"
        )
    det_a = float(np.linalg.det(a))
    witnesses = []
    for k in (0, 1):
        minor = np.delete(np.delete(a, k, axis=0), k, axis=1)
        det_minor = float(np.linalg.det(minor)) if minor.size else 1.0
        if det_a <= 0.0 or det_minor <= 0.0:
            raise ToleranceBreakdownError("nonpositive principal minors on a PSD matrix")
        delta = det_a / det_minor
        reduced = a.copy()
        reduced[k, k] -= delta
        if reduced[k, k] < 0.0:
            if reduced[k, k] < -tol.sing * scale_of(a):
                raise ToleranceBreakdownError("diagonal went negative after the spike split")
            reduced[k, k] = 0.0
        base = tree_factorize_singular(reduced, tol)
        spike = np.zeros(n)
        spike[k] = np.sqrt(delta)
        witnesses.append(CPFactorization.from_columns(base.columns + [spike], n=n))
    first = witnesses[0]
    wide = next(
        jcol for jcol in range(first.num_columns - 1) if first.factor[0, jcol] > 0.0
    )
    fam = rotation_family(first, (wide, first.num_columns - 1), tol)
    return witnesses[0], witnesses[1], fam


def _canonical_cycle_permutation(shape) -> np.ndarray:
    """Permutation sending the walk order of the cycle to 0, 1, ..., n-1."""
    cyc = shape.cycle_vertices
    perm = np.empty(len(cyc), dtype=int)
    for pos, v in enumerate(cyc):
        perm[v] = pos
    return perm


def cycle_factorize(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> list:
    """All factorizations of a matrix whose graph is one cycle (length >= 4).

    After relabeling the cycle to 0-1-...-n-1-0, the column covering edge
    {0, 1} is (sqrt(t), a_01/sqrt(t)); the remainder must be a singular
    path matrix, which pins t to a root of the quadratic
    c t^2 - (a c + a_01^2 - b^2) t + a a_01^2 = 0 built from the 2x2 Schur
    complement of the block away from {0, 1}.  Each admissible root (t > 0,
    remainder doubly nonnegative) completes uniquely through the path
    factorization.  One root (double) exactly when the comparison matrix is
    singular, else two.
    """
    a = np.asarray(a, dtype=float)
    _require_nonnegative(a, tol)
    g = graph_of_matrix(a, tol)
    shape = classify_shape(g)
    if shape.kind is not ShapeKind.SINGLE_CYCLE:
        raise InapplicableMatrixError(f"graph is {shape.kind.value}, expected a single cycle")
    n = g.n
    perm = _canonical_cycle_permutation(shape)
    inv = np.argsort(perm)
    ap = a[np.ix_(inv, inv)]

    h1 = ap[0, 1]
    rest = np.arange(2, n)
    block = ap[np.ix_(rest, rest)]
    coupling = ap[np.ix_(rest, np.array([0, 1]))]
    try:
        k2 = coupling.T @ np.linalg.solve(block, coupling)
    except np.linalg.LinAlgError as exc:
        raise ToleranceBreakdownError("interior block of the cycle is singular") from exc
    aconst = ap[0, 0] - k2[0, 0]
    cconst = ap[1, 1] - k2[1, 1]
    bconst = -k2[0, 1]
    scale = scale_of(ap)
    if cconst <= tol.sing * scale:
        raise ToleranceBreakdownError("degenerate quadratic; input not CP at tolerance")

    bb = aconst * cconst + h1 * h1 - bconst * bconst
    disc = bb * bb - 4.0 * cconst * aconst * h1 * h1
    if bb <= 0.0:
        raise ToleranceBreakdownError("no positive root; input not CP at tolerance")
    # a true double root leaves disc at roundoff level (eps times its own
    # terms, amplified by any pendant peeling and the interior solve that
    # produced the coefficients); treating that as zero keeps the root
    # count matched to the comparison-matrix dichotomy without a second
    # spectral test.  Genuinely split roots sit many orders higher.
    noise = np.finfo(float).eps * (bb * bb + abs(4.0 * cconst * aconst) * h1 * h1)
    if disc <= 1e4 * noise:
        if disc < -tol.sing * (1.0 + abs(bb)) ** 2:
            raise ToleranceBreakdownError("no real root; input not CP at tolerance")
        roots = [0.5 * bb / cconst]  # double root: vertex of the parabola
    else:
        sq = float(np.sqrt(disc))
        qq = 0.5 * (bb + sq)
        t_hi = qq / cconst
        t_lo = aconst * h1 * h1 / qq
        if abs(t_hi - t_lo) <= tol.sing * (1.0 + t_hi + t_lo):
            roots = [0.5 * bb / cconst]
        else:
            roots = sorted([t_lo, t_hi])

    results = []
    for t in roots:
        if t <= tol.sing * scale:
            log.debug("cycle root %.3e rejected: nonpositive", t)
            continue
        col1 = np.zeros(n)
        col1[0] = np.sqrt(t)
        col1[1] = h1 / col1[0]
        remainder = ap - np.outer(col1, col1)
        remainder[0, 1] = remainder[1, 0] = 0.0
        ok = True
        for dd in (0, 1):
            if remainder[dd, dd] < 0.0:
                if remainder[dd, dd] < -tol.sing * scale:
                    ok = False
                    break
                remainder[dd, dd] = 0.0
        if not ok or float(remainder.min()) < -tol.sing * scale:
            log.debug("cycle root %.3e rejected: remainder not nonnegative", t)
            continue
        if not is_psd(remainder, tol):
            log.debug("cycle root %.3e rejected: remainder not PSD", t)
            continue
        path_cols = tree_factorize_singular(remainder, tol).columns
        cols = [col1] + path_cols
        # relabel back: original vertex v sits at canonical position perm[v]
        candidate = CPFactorization.from_columns([col[perm] for col in cols], n=n)
        if all(
            canonical_distance(candidate, seen) > tol.sing * scale for seen in results
        ):
            results.append(candidate)
    if not results:
        raise ToleranceBreakdownError(
            "no admissible root survived; tolerance breakdown on a CP input"
        )
    return results


def unicyclic_factorize(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> list:
    """Factorizations of a matrix whose graph has exactly one cycle.

    Pendant columns are forced (each pendant vertex is covered by one edge
    only), so peeling reduces the problem to the pure cycle core; the one
    or two cycle factorizations are then re-extended by the peeled columns.
    """
    a = np.asarray(a, dtype=float)
    _require_nonnegative(a, tol)
    g = graph_of_matrix(a, tol)
    shape = classify_shape(g)
    if shape.kind is ShapeKind.SINGLE_CYCLE:
        return cycle_factorize(a, tol)
    if shape.kind is not ShapeKind.UNICYCLIC:
        raise InapplicableMatrixError(
            f"graph is {shape.kind.value}, expected one cycle plus trees"
        )
    work = a.copy()
    alive = set(range(g.n))
    peeled = _peel_pendants(work, g, alive, tol)
    core = sorted(alive)
    sub = work[np.ix_(core, core)]
    results = []
    for f in cycle_factorize(sub, tol):
        cols = list(peeled)
        for col in f.columns:
            full = np.zeros(g.n)
            full[core] = col
            cols.append(full)
        results.append(CPFactorization.from_columns(cols, n=g.n))
    return results


def two_factorizations_general(a: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """Two verifying, canonically distinct factorizations of an irreducible
    triangle-free matrix with a nonsingular comparison matrix.

    Scaling by d = M(A)^{-1} e makes the comparison matrix strictly
    diagonally dominant in every row; removing a non-bridge edge {p, q}
    (its column has sqrt(a_pq) at both ends) preserves that, so the
    recursion bottoms out at a nonsingular tree whose two witnesses seed
    the pair.  Scaling back maps them onto factorizations of the input.
    """
    a = np.asarray(a, dtype=float)
    _require_nonnegative(a, tol)
    g = graph_of_matrix(a, tol)
    if g.n < 2:
        raise InapplicableMatrixError("need at least two vertices")
    if not is_connected(g):
        raise InapplicableMatrixError(
            "matrix is reducible; factor each connected component separately"
        )
    if not is_triangle_free(g):
        raise InapplicableMatrixError("graph has a triangle; construction inapplicable")
    m = comparison_matrix(a)
    pair = min_eig_pair(m, tol)
    if pair.value < -tol.sing * scale_of(m):
        raise InapplicableMatrixError("not completely positive (comparison matrix not PSD)")
    if abs(pair.value) <= tol.sing * scale_of(m):
        raise InapplicableMatrixError(
            "comparison matrix is singular: factorization is unique; "
            "use unique_factorization_null_vector"
        )
    d = np.linalg.solve(m, np.ones(g.n))
    if float(d.min()) <= 0.0:
        raise ToleranceBreakdownError(
            "inverse comparison matrix is not entrywise positive; "
            "input is not an irreducible M-matrix at tolerance"
        )
    work = scale_diag(a, d)
    wg = graph_of_matrix(work, tol)
    prefix = []
    while classify_shape(wg).kind is not ShapeKind.TREE:
        p, q = find_non_bridge_edge(wg)
        col = np.zeros(g.n)
        col[p] = col[q] = np.sqrt(work[p, q])
        work = work - np.outer(col, col)
        work[p, q] = work[q, p] = 0.0
        if work[p, p] <= 0.0 or work[q, q] <= 0.0:
            raise ToleranceBreakdownError("diagonal exhausted while removing an edge")
        prefix.append(col)
        wg = wg.without_edge((p, q))
    w0, w1, _ = tree_two_witnesses(work, tol)
    out = []
    for w in (w0, w1):
        cols = [c / d for c in prefix + w.columns]
        out.append(CPFactorization.from_columns(cols, n=g.n))
    return out[0], out[1]


def _rank2_rotated_seed(a: np.ndarray, tol: Tolerance) -> CPFactorization:
    """Nonnegative 2-column factor of a rank-2 doubly nonnegative matrix.

    Rows of the spectral factor live in a plane; pairwise nonnegative inner
    products confine their directions to an arc of width at most pi/2.
    Rotating the arc midpoint onto pi/4 puts every row in the closed first
    quadrant.
    """
    vals, vecs = jacobi_eigh(a, tol)
    v = vecs[:, -2:] * np.sqrt(np.maximum(vals[-2:], 0.0))
    norms = np.hypot(v[:, 0], v[:, 1])
    ref = int(np.argmax(norms))
    phi = np.arctan2(v[:, 1], v[:, 0])
    rel = np.mod(phi - phi[ref] + np.pi, 2.0 * np.pi) - np.pi
    live = norms > tol.sing * scale_of(v)
    lo, hi = float(np.min(rel[live])), float(np.max(rel[live]))
    if hi - lo > 0.5 * np.pi + 1e-9:
        raise ToleranceBreakdownError("row directions spread beyond a quarter turn")
    alpha = 0.25 * np.pi - phi[ref] - 0.5 * (lo + hi)
    c, s = float(np.cos(alpha)), float(np.sin(alpha))
    b = v @ np.array([[c, s], [-s, c]])
    if float(b.min()) < -tol.sing * scale_of(b):
        raise ToleranceBreakdownError("rotated rank-2 factor went negative")
    b = np.maximum(b, 0.0)
    return CPFactorization(b)


def rank2_factorize(a: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """Factorize an irreducible rank-2 CP matrix.

    If some off-diagonal entry a_ij vanishes while rows i and j do not, the
    two columns are forced (the i-th and j-th columns of A, rescaled) and
    the factorization is unique; that :class:`CPFactorization` is returned.
    Otherwise the supports of any minimal pair nest, so infinitely many
    minimal factorizations exist and the seeded :class:`RotationFamily` is
    returned instead.
    """
    a = np.asarray(a, dtype=float)
    _require_nonnegative(a, tol)
    g = graph_of_matrix(a, tol)
    if not is_connected(g):
        raise InapplicableMatrixError(
            "matrix is reducible; factor each connected component separately"
        )
    if rank_with_tol(a, tol) != 2:
        raise InapplicableMatrixError("matrix rank is not 2")
    if not is_psd(a, tol):
        raise InapplicableMatrixError("not positive semidefinite, hence not CP")
    n = g.n
    thresh = tol.sing * scale_of(a)
    row_nonzero = [float(np.max(np.abs(a[i]))) > thresh for i in range(n)]
    zero_pair = None
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i, j]) <= thresh and row_nonzero[i] and row_nonzero[j]:
                zero_pair = (i, j)
                break
        if zero_pair:
            break
    if zero_pair is not None:
        i, j = zero_pair
        if a[i, i] <= thresh or a[j, j] <= thresh:
            raise ToleranceBreakdownError("vanishing diagonal on a nonzero row")
        f = CPFactorization.from_columns(
            [a[:, i] / np.sqrt(a[i, i]), a[:, j] / np.sqrt(a[j, j])], n=n
        )
        if verify_factorization(a, f, tol) > tol.sing * scale_of(a):
            raise ToleranceBreakdownError(
                "forced rank-2 pair does not reconstruct the input"
            )
        return f
    seed = _rank2_rotated_seed(a, tol)
    return rotation_family(seed, (0, 1), tol)
