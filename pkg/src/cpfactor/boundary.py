"""Boundary-of-cone machinery: conjugating a CP matrix through the matrix
of representative minimal zeros of an extremal copositive matrix.

If W collects n representative minimal zeros of an exceptional extremal
copositive M (one zero per column, W nonsingular), then every CP matrix A
orthogonal to M factors as A = W C W^T with C completely positive, and A
and C have the same number of (minimal) CP factorizations.  The classical
5x5 Horn matrix and its zero basis are built in; larger bases can be
supplied as files.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InapplicableMatrixError
from .factorizer import CPFactorization
from .matrix_core import DEFAULT_TOL, Tolerance, is_psd, scale_of

_COND_WARN = 1e8


@dataclass(frozen=True, eq=False)
class ZeroBasis:
    """Square nonnegative matrix whose columns are representative minimal
    zeros of an extremal copositive matrix."""

    w: np.ndarray
    source_label: str = "user-supplied"

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("zero basis must be square (one zero per column)")
        if float(w.min()) < 0.0:
            raise ValueError("zeros of a copositive matrix are nonnegative")
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return self.w.shape[0]


def horn_matrix() -> np.ndarray:
    """The classical 5x5 extremal copositive Horn matrix."""
    return np.array(
        [
            [1.0, -1.0, 1.0, 1.0, -1.0],
            [-1.0, 1.0, -1.0, 1.0, 1.0],
            [1.0, -1.0, 1.0, -1.0, 1.0],
            [1.0, 1.0, -1.0, 1.0, -1.0],
            [-1.0, 1.0, 1.0, -1.0, 1.0],
        ]
    )


def horn_zero_basis() -> ZeroBasis:
    """Minimal zeros of the Horn matrix: w_i = e_i + e_{i+1 mod 5}."""
    w = np.zeros((5, 5))
    for i in range(5):
        w[i, i] = 1.0
        w[(i + 1) % 5, i] = 1.0
    return ZeroBasis(w=w, source_label="Horn")


def reduce_by_zeros(
    a: np.ndarray,
    basis: ZeroBasis,
    tol: Tolerance = DEFAULT_TOL,
    extremal: np.ndarray | None = None,
) -> np.ndarray:
    """C = W^{-1} A W^{-T}, the CP matrix conjugated away from the boundary.

    ``a`` must be symmetric, entrywise nonnegative and PSD.  Orthogonality
    of ``a`` to the extremal matrix is the caller's responsibility; it is
    checked (warning only) when ``extremal`` is supplied.  A significantly
    negative entry of C means ``a`` lies outside the cone face spanned by
    the zeros and raises.
    """
    a = np.asarray(a, dtype=float)
    w = basis.w
    if a.shape != w.shape:
        raise ValueError("matrix and zero basis dimensions differ")
    if float(a.min()) < -tol.sing * scale_of(a):
        raise InapplicableMatrixError("matrix has negative entries")
    if not is_psd(a, tol):
        raise InapplicableMatrixError("matrix is not positive semidefinite")
    if extremal is not None:
        extremal = np.asarray(extremal, dtype=float)
        ip = float(np.trace(extremal @ a))
        bound = tol.sing * float(np.max(np.abs(extremal))) * float(np.max(np.abs(a)))
        if abs(ip) > bound:
            warnings.warn(
                f"<M, A> = {ip:.3e} is not zero at tolerance; the reduction "
                "identity needs A orthogonal to the extremal matrix",
                stacklevel=2,
            )
    cond = float(np.linalg.cond(w))
    if not np.isfinite(cond):
        raise InapplicableMatrixError("zero basis is singular")
    if cond > _COND_WARN:
        warnings.warn(
            f"zero basis condition number {cond:.2e} exceeds {_COND_WARN:.0e}; "
            "reduction may lose accuracy",
            stacklevel=2,
        )
    c = np.linalg.solve(w, np.linalg.solve(w, a.T).T)
    c = 0.5 * (c + c.T)
    if float(c.min()) < -tol.sing * scale_of(c):
        raise InapplicableMatrixError(
            "reduced matrix has negative entries: input lies outside the "
            "cone face spanned by the zero basis"
        )
    return c


def lift_factorization(f: CPFactorization, basis: ZeroBasis) -> CPFactorization:
    """Map a factorization of C through W: columns become W b_i, a
    factorization of W C W^T with the same column count."""
    if f.n != basis.n:
        raise ValueError("factorization and zero basis dimensions differ")
    return CPFactorization(basis.w @ f.factor)


class CycleProductResult(NamedTuple):
    products_equal: bool
    det_value: float
    diag_product: float
    cycle_product: float


def cycle_product_condition(b: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> CycleProductResult:
    """Uniqueness test for a cyclic two-diagonal factor.

    ``b`` must carry s_i > 0 on the diagonal, t_i > 0 on the subdiagonal,
    t_n > 0 in the top-right corner, zeros elsewhere.  Then det M(BB^T)
    equals (prod s - prod t)^2, so BB^T has a unique CP factorization
    exactly when the two products agree.
    """
    b = np.asarray(b, dtype=float)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError("expected a square factor matrix")
    n = b.shape[0]
    if n < 3:
        raise ValueError("cyclic pattern needs at least 3 rows")
    thresh = tol.sing * scale_of(b)
    pattern = np.zeros((n, n), dtype=bool)
    pattern[np.arange(n), np.arange(n)] = True
    pattern[np.arange(1, n), np.arange(n - 1)] = True
    pattern[0, n - 1] = True
    s = np.diagonal(b)
    t = np.append(b[np.arange(1, n), np.arange(n - 1)], b[0, n - 1])
    if np.any(s <= thresh) or np.any(t <= thresh):
        raise ValueError("diagonal and cycle entries must be strictly positive")
    if float(np.max(np.abs(b[~pattern]))) > thresh:
        raise ValueError("entries outside the cyclic two-diagonal pattern")
    ps = float(np.prod(s))
    pt = float(np.prod(t))
    equal = abs(ps - pt) <= tol.rel * (1.0 + max(abs(ps), abs(pt)))
    return CycleProductResult(
        products_equal=bool(equal),
        det_value=(ps - pt) ** 2,
        diag_product=ps,
        cycle_product=pt,
    )
