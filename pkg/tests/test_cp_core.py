"""CP decision, cp-rank, signature similarity and the census."""

import numpy as np
import pytest

from cpfactor import (
    CPFactorization,
    InapplicableMatrixError,
    MinimalCount,
    TotalCount,
    canonical_distance,
    classify_factorization_count,
    cp_rank_triangle_free,
    horn_zero_basis,
    is_cp_triangle_free,
    signature_similarity_check,
)
from cpfactor.graph_analysis import graph_of_matrix
from conftest import EDGE2, PATH3, cycle5_matrix, cycle_adjacency


def test_is_cp_triangle_free_examples():
    assert is_cp_triangle_free(cycle5_matrix(2.0))
    # PSD and nonnegative, but the comparison matrix dips to 1.8 - 2 < 0
    assert not is_cp_triangle_free(1.8 * np.eye(5) + cycle_adjacency(5))
    assert is_cp_triangle_free(np.diag([0.0, 1.0, 2.5]))


def test_is_cp_triangle_free_errors():
    with pytest.raises(InapplicableMatrixError):
        is_cp_triangle_free(np.array([[1.0, -0.5], [-0.5, 1.0]]))
    triangle = np.ones((3, 3)) + 2.0 * np.eye(3)
    with pytest.raises(InapplicableMatrixError):
        is_cp_triangle_free(triangle)


def test_cp_rank_triangle_free():
    assert cp_rank_triangle_free(cycle5_matrix(2.0)) == 5
    assert cp_rank_triangle_free(PATH3) == 2
    assert cp_rank_triangle_free(np.ones((2, 2))) == 1
    with pytest.raises(InapplicableMatrixError):
        cp_rank_triangle_free(np.diag([1.0, 1.0]))  # disconnected


def test_signature_similarity():
    np.testing.assert_array_equal(
        signature_similarity_check(PATH3), np.array([1.0, -1.0, 1.0])
    )
    four_cycle = 2.0 * np.eye(4) + cycle_adjacency(4)
    np.testing.assert_array_equal(
        signature_similarity_check(four_cycle), np.array([1.0, -1.0, 1.0, -1.0])
    )
    assert signature_similarity_check(cycle5_matrix(2.0)) is None


def test_census_cycle5_unique():
    census = classify_factorization_count(cycle5_matrix(2.0))
    assert census.minimal_count is MinimalCount.EXACTLY_ONE
    assert census.total_count is TotalCount.EXACTLY_ONE
    assert census.cp_rank == 5
    assert len(census.witnesses) == 1
    expected = CPFactorization(horn_zero_basis().w)
    assert canonical_distance(census.witnesses[0], expected) < 1e-10
    # unique witness has exactly |E| columns
    assert census.witnesses[0].num_columns == len(graph_of_matrix(cycle5_matrix(2.0)).edges)


def test_census_cycle5_two():
    census = classify_factorization_count(cycle5_matrix(3.0))
    assert census.minimal_count is MinimalCount.EXACTLY_TWO
    assert census.total_count is TotalCount.AT_LEAST_TWO_FINITE_POSSIBLE
    assert census.cp_rank == 5
    assert len(census.witnesses) == 2


def test_census_rank2_branches():
    nozero = classify_factorization_count(EDGE2)
    assert nozero.minimal_count is MinimalCount.INFINITELY_MANY
    assert nozero.total_count is TotalCount.INFINITELY_MANY
    assert nozero.cp_rank == 2

    withzero = classify_factorization_count(PATH3)
    assert withzero.minimal_count is MinimalCount.EXACTLY_ONE
    assert withzero.cp_rank == 2
    assert withzero.witnesses[0].num_columns == 2


def test_census_rank2_agrees_with_tree_route():
    # EDGE2 is also a nonsingular tree; both rules say infinitely many
    m = np.array([[2.0, -1.0], [-1.0, 2.0]])
    assert np.linalg.det(m) > 0
    census = classify_factorization_count(EDGE2)
    assert census.minimal_count is MinimalCount.INFINITELY_MANY


def test_census_tree_nonsingular():
    cols = [
        np.array([1.0, 1.2, 0.0, 0.0]),
        np.array([0.0, 0.8, 1.1, 0.0]),
        np.array([0.0, 0.6, 0.0, 0.9]),
        np.array([0.0, 0.7, 0.0, 0.0]),
    ]
    a = CPFactorization.from_columns(cols).gram()
    census = classify_factorization_count(a)
    assert census.minimal_count is MinimalCount.INFINITELY_MANY
    assert census.total_count is TotalCount.INFINITELY_MANY
    assert census.cp_rank == 4


def test_census_tree_singular_column_count():
    census = classify_factorization_count(PATH3)
    # rank = n - 1 = 2 columns for a singular tree matrix
    assert census.witnesses[0].num_columns == 2


def test_census_even_cycle_bipartite_upgrade():
    a = 2.5 * np.eye(4) + cycle_adjacency(4)
    census = classify_factorization_count(a)
    assert census.minimal_count is MinimalCount.EXACTLY_TWO
    assert census.total_count is TotalCount.INFINITELY_MANY


def test_census_general_triangle_free():
    cols = []
    values = iter([0.9, 1.3, 0.7, 1.6, 1.1, 0.8, 1.4, 0.6, 1.2, 0.5, 1.0, 1.5])
    for p in (0, 1):
        for q in (2, 3, 4):
            col = np.zeros(5)
            col[p] = next(values)
            col[q] = next(values)
            cols.append(col)
    a = CPFactorization.from_columns(cols).gram()
    census = classify_factorization_count(a)
    assert census.minimal_count is MinimalCount.AT_LEAST_TWO
    assert census.total_count is TotalCount.INFINITELY_MANY  # bipartite
    assert census.cp_rank == 6
    assert len(census.witnesses) == 2


def test_census_margin_warning():
    a = cycle5_matrix(2.0) + 3e-8 * np.eye(5)
    census = classify_factorization_count(a)
    assert census.margin_warning
    assert census.minimal_count is MinimalCount.EXACTLY_ONE


def test_census_minimal_one_implies_total_one():
    for a in (cycle5_matrix(2.0), PATH3, np.ones((2, 2))):
        census = classify_factorization_count(a)
        if census.minimal_count is MinimalCount.EXACTLY_ONE:
            assert census.total_count is TotalCount.EXACTLY_ONE


def test_census_errors():
    with pytest.raises(InapplicableMatrixError):
        classify_factorization_count(np.diag([1.0, 2.0]))  # reducible
    with pytest.raises(InapplicableMatrixError):
        classify_factorization_count(1.8 * np.eye(5) + cycle_adjacency(5))  # not CP
    triangle = np.ones((3, 3)) + 2.0 * np.eye(3)
    with pytest.raises(InapplicableMatrixError):
        classify_factorization_count(triangle)  # rank 3 with a triangle
    with pytest.raises(InapplicableMatrixError):
        classify_factorization_count(np.array([[1.0, -0.1], [-0.1, 1.0]]))


def test_census_single_vertex():
    census = classify_factorization_count(np.array([[4.0]]))
    assert census.minimal_count is MinimalCount.EXACTLY_ONE
    assert census.cp_rank == 1
    np.testing.assert_allclose(census.witnesses[0].factor, [[2.0]])
    zero = classify_factorization_count(np.array([[0.0]]))
    assert zero.cp_rank == 0


def test_census_witnesses_reconstruct():
    from cpfactor import verify_factorization

    for a in (cycle5_matrix(2.0), cycle5_matrix(3.0), PATH3, EDGE2):
        census = classify_factorization_count(a)
        for w in census.witnesses:
            assert verify_factorization(a, w) <= 1e-8 * (1.0 + np.max(np.abs(a)))


def test_census_dichotomy_soundness_random():
    # a nonsingular comparison matrix never yields a unique verdict, and a
    # singular one always recovers the generating columns
    from cpfactor import ShapeKind, build_instance, random_instance

    for seed in range(12):
        kind = (ShapeKind.TREE, ShapeKind.SINGLE_CYCLE, ShapeKind.UNICYCLIC,
                ShapeKind.TRIANGLE_FREE_GENERAL)[seed % 4]
        n = {ShapeKind.TREE: 5, ShapeKind.SINGLE_CYCLE: 6,
             ShapeKind.UNICYCLIC: 7, ShapeKind.TRIANGLE_FREE_GENERAL: 6}[kind]
        a, generated = build_instance(random_instance(seed, kind, n, False))
        census = classify_factorization_count(a)
        assert census.minimal_count is not MinimalCount.EXACTLY_ONE

        a2, gen2 = build_instance(random_instance(seed, kind, n, True))
        census2 = classify_factorization_count(a2)
        assert census2.minimal_count is MinimalCount.EXACTLY_ONE
        assert canonical_distance(census2.witnesses[0], gen2) < 1e-7 * (
            1.0 + np.max(np.abs(gen2.factor))
        )
