"""Symmetric-matrix primitives shared by every other module.

Matrices are plain ``numpy.ndarray`` values.  ``as_symmetric`` is the
construction gate that enforces symmetry once; downstream code assumes it.
Every threshold comparison is scaled by ``1 + max|entry|`` of the matrix
being judged (see ``scale_of``), so decisions are invariant under moderate
magnitude changes.

The eigensolver is a cyclic Jacobi iteration.  At the target sizes (a few
dozen rows) it is deterministic, accurate well beyond the classification
thresholds, and keeps the decision path independent of the LAPACK build.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError

_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Tolerance:
    """Threshold pair: ``rel`` for residual accuracy, ``sing`` for
    singularity / zero-entry / PSD decisions."""

    rel: float = 1e-9
    sing: float = 1e-8

    def __post_init__(self) -> None:
        if not 0.0 < self.rel < 1.0:
            raise ValueError(f"rel must lie in (0, 1), got {self.rel!r}")
        if not 0.0 < self.sing < 1.0:
            raise ValueError(f"sing must lie in (0, 1), got {self.sing!r}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, eq=False)
class SpectralPair:
    """An eigenvalue with a unit eigenvector whose largest-magnitude entry
    is positive (a fixed sign convention keeps outputs reproducible)."""

    value: float
    vector: np.ndarray


def scale_of(a) -> float:
    """1 + max-abs-entry of ``a``; the factor applied to every threshold."""
    arr = np.asarray(a, dtype=float)
    if arr.size == 0:
        return 1.0
    return 1.0 + float(np.max(np.abs(arr)))


def as_symmetric(entries, atol: float = 1e-12) -> np.ndarray:
    """Validate a real square symmetric matrix; return an exactly symmetric
    float copy.  ``atol`` bounds the tolerated asymmetry of the input."""
    a = np.asarray(entries, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if a.size and float(np.max(np.abs(a - a.T))) > atol:
        raise ValueError("matrix is not symmetric")
    return 0.5 * (a + a.T)


def comparison_matrix(a: np.ndarray) -> np.ndarray:
    """|a_ii| on the diagonal, -|a_ij| off it."""
    a = np.asarray(a, dtype=float)
    m = -np.abs(a)
    np.fill_diagonal(m, np.abs(np.diagonal(a)))
    return m


def jacobi_eigh(a: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """Full eigensystem of a symmetric matrix via cyclic Jacobi rotations.

    Returns ``(values, vectors)`` with eigenvalues ascending and unit
    eigenvectors in the matching columns, sign-fixed.  Sweeps run until the
    off-diagonal Frobenius mass falls well below the decision thresholds;
    exceeding the sweep cap raises :class:`EigensolverError` rather than
    returning a silently inaccurate answer.
    """
    work = np.array(a, dtype=float)
    n = work.shape[0]
    vecs = np.eye(n)
    fro = float(np.sqrt((work * work).sum()))
    if n > 1 and fro > 0.0:
        # converge 1000x below the tightest threshold; floor keeps the
        # target reachable in double precision
        stop = fro * max(1e-3 * min(tol.rel, tol.sing), 5e-16)
        skip = stop / (2.0 * n)
        offdiag = ~np.eye(n, dtype=bool)
        for _ in range(_MAX_SWEEPS):
            off2 = float((work[offdiag] ** 2).sum())
            if off2 <= stop * stop:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = work[p, q]
                    if abs(apq) <= skip:
                        continue
                    tau = (work[q, q] - work[p, p]) / (2.0 * apq)
                    t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + float(np.hypot(1.0, tau)))
                    c = 1.0 / float(np.sqrt(1.0 + t * t))
                    s = t * c
                    cp = work[:, p].copy()
                    cq = work[:, q].copy()
                    work[:, p] = c * cp - s * cq
                    work[:, q] = s * cp + c * cq
                    rp = work[p, :].copy()
                    rq = work[q, :].copy()
                    work[p, :] = c * rp - s * rq
                    work[q, :] = s * rp + c * rq
                    work[p, q] = work[q, p] = 0.0
                    vp = vecs[:, p].copy()
                    vq = vecs[:, q].copy()
                    vecs[:, p] = c * vp - s * vq
                    vecs[:, q] = s * vp + c * vq
        else:
            raise EigensolverError(
                f"Jacobi iteration did not converge within {_MAX_SWEEPS} sweeps"
            )
    vals = np.diagonal(work).copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    for j in range(n):
        k = int(np.argmax(np.abs(vecs[:, j])))
        if vecs[k, j] < 0.0:
            vecs[:, j] = -vecs[:, j]
    return vals, vecs


def min_eig_pair(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> SpectralPair:
    """Algebraically smallest eigenvalue and a unit eigenvector.

    The returned pair is residual-checked: ``max|A v - lambda v|`` must not
    exceed ``tol.rel * scale_of(A)``.
    """
    a = np.asarray(a, dtype=float)
    vals, vecs = jacobi_eigh(a, tol)
    value = float(vals[0])
    vector = vecs[:, 0]
    residual = float(np.max(np.abs(a @ vector - value * vector)))
    if residual > tol.rel * scale_of(a):
        raise EigensolverError(
            f"eigenpair residual {residual:.3e} exceeds {tol.rel * scale_of(a):.3e}"
        )
    return SpectralPair(value=value, vector=vector)


def is_psd(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff the smallest eigenvalue is >= -tol.sing * scale_of(a)."""
    a = np.asarray(a, dtype=float)
    vals, _ = jacobi_eigh(a, tol)
    return bool(vals[0] >= -tol.sing * scale_of(a))


def rank_with_tol(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of eigenvalues with |lambda| > tol.sing * scale_of(a)."""
    a = np.asarray(a, dtype=float)
    vals, _ = jacobi_eigh(a, tol)
    return int(np.count_nonzero(np.abs(vals) > tol.sing * scale_of(a)))


def schur_complement(a: np.ndarray, sigma, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Schur complement of the principal block indexed by ``sigma`` (0-based).

    Returns ``A(rest) - A(rest|sigma) A[sigma]^{-1} A(sigma|rest)``,
    symmetrized.  Raises ``ValueError`` if ``A[sigma]`` is singular at
    tolerance.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    sigma = sorted(set(int(i) for i in sigma))
    if sigma and (sigma[0] < 0 or sigma[-1] >= n):
        raise ValueError(f"index set {sigma} out of range for n={n}")
    if not sigma:
        return a.copy()
    rest = [i for i in range(n) if i not in sigma]
    block = a[np.ix_(sigma, sigma)]
    vals, _ = jacobi_eigh(block, tol)
    if float(np.min(np.abs(vals))) <= tol.sing * scale_of(block):
        raise ValueError("principal submatrix is singular at tolerance")
    if not rest:
        return np.zeros((0, 0))
    coupling = a[np.ix_(sigma, rest)]
    s = a[np.ix_(rest, rest)] - coupling.T @ np.linalg.solve(block, coupling)
    return 0.5 * (s + s.T)


def scale_diag(a: np.ndarray, d) -> np.ndarray:
    """Two-sided positive diagonal scaling: result[i, j] = d_i a_ij d_j."""
    a = np.asarray(a, dtype=float)
    d = np.asarray(d, dtype=float)
    if d.shape != (a.shape[0],):
        raise ValueError("scaling vector length does not match the matrix")
    if np.any(d <= 0.0):
        raise ValueError("scaling vector must be strictly positive")
    return a * np.outer(d, d)


def permute(a: np.ndarray, p) -> np.ndarray:
    """Relabel indices: result[p[i], p[j]] = a[i, j]."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    p = np.asarray(p, dtype=int)
    if sorted(p.tolist()) != list(range(n)):
        raise ValueError("not a permutation of 0..n-1")
    inv = np.argsort(p)
    return a[np.ix_(inv, inv)]


def permute_vector(x: np.ndarray, p) -> np.ndarray:
    """Relabel vector entries: result[p[i]] = x[i]."""
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=int)
    if sorted(p.tolist()) != list(range(x.shape[0])):
        raise ValueError("not a permutation of 0..n-1")
    return x[np.argsort(p)]
