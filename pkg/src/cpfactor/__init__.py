"""cpfactor: complete positivity decisions, CP factorization counts and
explicit constructions for symmetric nonnegative matrices with
triangle-free graphs, boundary reductions through zero bases of extremal
copositive matrices, and minimal-face descriptions of the CP cone."""

from .boundary import (
    CycleProductResult,
    ZeroBasis,
    cycle_product_condition,
    horn_matrix,
    horn_zero_basis,
    lift_factorization,
    reduce_by_zeros,
)
from .cp_core import (
    FactorizationCensus,
    MinimalCount,
    TotalCount,
    classify_factorization_count,
    cp_rank_triangle_free,
    is_cp_triangle_free,
    signature_similarity_check,
)
from .errors import (
    CpfactorError,
    EigensolverError,
    InapplicableMatrixError,
    ToleranceBreakdownError,
)
from .faces import FaceDescription, FaceKind, face_membership, minimal_face
from .factorizer import (
    CPFactorization,
    RotationFamily,
    canonical_distance,
    canonicalize,
    cycle_factorize,
    pairwise_independent_columns,
    rank2_factorize,
    rotation_family,
    rotation_family_sample,
    tree_factorize_singular,
    tree_two_witnesses,
    two_factorizations_general,
    unicyclic_factorize,
    unique_factorization_null_vector,
    verify_factorization,
)
from .graph_analysis import (
    GraphShape,
    ShapeKind,
    SimpleGraph,
    classify_shape,
    find_non_bridge_edge,
    graph_of_matrix,
    is_triangle_free,
    pendant_vertices,
)
from .matrix_core import (
    DEFAULT_TOL,
    SpectralPair,
    Tolerance,
    as_symmetric,
    comparison_matrix,
    is_psd,
    jacobi_eigh,
    min_eig_pair,
    permute,
    permute_vector,
    rank_with_tol,
    scale_diag,
    schur_complement,
)
from .oracle import (
    InstanceRecipe,
    Lcg,
    brute_force_cycle_roots,
    build_instance,
    random_instance,
)

__version__ = "0.1.0"

__all__ = [
    "CPFactorization",
    "CpfactorError",
    "CycleProductResult",
    "DEFAULT_TOL",
    "EigensolverError",
    "FaceDescription",
    "FaceKind",
    "FactorizationCensus",
    "GraphShape",
    "InapplicableMatrixError",
    "InstanceRecipe",
    "Lcg",
    "MinimalCount",
    "RotationFamily",
    "ShapeKind",
    "SimpleGraph",
    "SpectralPair",
    "Tolerance",
    "ToleranceBreakdownError",
    "TotalCount",
    "ZeroBasis",
    "as_symmetric",
    "brute_force_cycle_roots",
    "build_instance",
    "canonical_distance",
    "canonicalize",
    "classify_factorization_count",
    "classify_shape",
    "comparison_matrix",
    "cp_rank_triangle_free",
    "cycle_factorize",
    "cycle_product_condition",
    "face_membership",
    "find_non_bridge_edge",
    "graph_of_matrix",
    "horn_matrix",
    "horn_zero_basis",
    "is_cp_triangle_free",
    "is_psd",
    "is_triangle_free",
    "jacobi_eigh",
    "lift_factorization",
    "min_eig_pair",
    "minimal_face",
    "pairwise_independent_columns",
    "pendant_vertices",
    "permute",
    "permute_vector",
    "rank2_factorize",
    "rank_with_tol",
    "random_instance",
    "reduce_by_zeros",
    "rotation_family",
    "rotation_family_sample",
    "scale_diag",
    "schur_complement",
    "signature_similarity_check",
    "tree_factorize_singular",
    "tree_two_witnesses",
    "two_factorizations_general",
    "unicyclic_factorize",
    "unique_factorization_null_vector",
    "verify_factorization",
]
