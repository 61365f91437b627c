"""Minimal face of the completely positive cone containing a given matrix.

The minimal face is the cone generated by all rank-1 terms b b^T whose
removal leaves the matrix completely positive.  When the factorization is
unique the face is polyhedral: its generators are exactly the columns of
that factorization.  Otherwise the face has infinitely many extreme rays
and only the membership predicate is offered.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .cp_core import TotalCount, classify_factorization_count
from .errors import InapplicableMatrixError
from .graph_analysis import graph_of_matrix, is_triangle_free
from .matrix_core import DEFAULT_TOL, Tolerance, comparison_matrix, is_psd, scale_of


class FaceKind(str, Enum):
    POLYHEDRAL_GENERATORS = "polyhedral_generators"
    IMPLICIT_MEMBERSHIP_ONLY = "implicit_membership_only"


@dataclass(frozen=True, eq=False)
class FaceDescription:
    kind: FaceKind
    generators: tuple
    n: int


def minimal_face(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> FaceDescription:
    """Generators of the minimal face when the factorization is unique;
    an implicit (membership-only) description otherwise."""
    a = np.asarray(a, dtype=float)
    census = classify_factorization_count(a, tol)
    if census.total_count is TotalCount.EXACTLY_ONE:
        witness = census.witnesses[0]
        return FaceDescription(
            kind=FaceKind.POLYHEDRAL_GENERATORS,
            generators=tuple(witness.columns),
            n=a.shape[0],
        )
    return FaceDescription(
        kind=FaceKind.IMPLICIT_MEMBERSHIP_ONLY, generators=(), n=a.shape[0]
    )


def face_membership(a: np.ndarray, b: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether b b^T lies in the minimal face of A, i.e. whether A - b b^T
    is completely positive.

    Decidable only while the difference keeps a triangle-free graph; other
    cases raise rather than approximate.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if b.shape != (a.shape[0],):
        raise ValueError("vector length does not match the matrix")
    if float(b.min()) < -tol.sing * scale_of(b):
        raise ValueError("membership is defined for nonnegative vectors only")
    g = graph_of_matrix(a, tol)
    if not is_triangle_free(g):
        raise InapplicableMatrixError("graph has a triangle; membership undecidable here")
    diff = a - np.outer(b, b)
    scale = scale_of(a)
    if float(diff.min()) < -tol.sing * scale:
        return False
    if not is_triangle_free(graph_of_matrix(diff, tol)):
        raise InapplicableMatrixError(
            "difference graph grew a triangle; membership undecidable here"
        )
    return is_psd(comparison_matrix(diff), tol)
