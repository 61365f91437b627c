"""Instance generator, the LCG, and the sampling-based cycle-root oracle."""

import json

import numpy as np
import pytest

from cpfactor import (
    CPFactorization,
    InstanceRecipe,
    Lcg,
    MinimalCount,
    ShapeKind,
    SimpleGraph,
    brute_force_cycle_roots,
    build_instance,
    canonical_distance,
    canonicalize,
    classify_factorization_count,
    cycle_factorize,
    random_instance,
)
from conftest import PATH3, cycle5_matrix


def test_lcg_is_deterministic():
    a, b = Lcg(123), Lcg(123)
    assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]
    c = Lcg(124)
    assert a.next_u64() != c.next_u64()
    r = Lcg(9)
    assert all(0.0 <= r.u01() < 1.0 for _ in range(100))
    assert all(0 <= r.randint(7) < 7 for _ in range(100))


def test_build_instance_cycle5():
    g = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    recipe = InstanceRecipe(g, tuple((1.0, 1.0) for _ in range(5)))
    a, f = build_instance(recipe)
    np.testing.assert_allclose(a, cycle5_matrix(2.0))
    assert f.num_columns == 5


def test_build_instance_path_and_diagonal():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    recipe = InstanceRecipe(g, ((1.0, 1.0), (1.0, 1.0)))
    a, _ = build_instance(recipe)
    np.testing.assert_allclose(a, PATH3)

    lonely = SimpleGraph.from_edges(2, [])
    recipe = InstanceRecipe(lonely, (), ((0, 2.0), (1, 3.0)))
    a, f = build_instance(recipe)
    np.testing.assert_allclose(a, np.diag([4.0, 9.0]))
    assert f.num_columns == 2


def test_random_instance_deterministic():
    r1 = random_instance(17, ShapeKind.UNICYCLIC, 7, True)
    r2 = random_instance(17, ShapeKind.UNICYCLIC, 7, True)
    assert r1.graph.edges == r2.graph.edges
    assert r1.column_values == r2.column_values
    r3 = random_instance(18, ShapeKind.UNICYCLIC, 7, True)
    assert r1.column_values != r3.column_values


def test_random_instance_shapes_and_singularity():
    from cpfactor import comparison_matrix, jacobi_eigh
    from cpfactor.graph_analysis import classify_shape

    for seed, kind, n in (
        (5, ShapeKind.TREE, 6),
        (6, ShapeKind.SINGLE_CYCLE, 6),
        (7, ShapeKind.UNICYCLIC, 8),
        (8, ShapeKind.TRIANGLE_FREE_GENERAL, 7),
    ):
        rec = random_instance(seed, kind, n, True)
        a, _ = build_instance(rec)
        assert classify_shape(rec.graph).kind is kind
        vals, _ = jacobi_eigh(comparison_matrix(a))
        assert abs(vals[0]) < 1e-10 * (1.0 + np.max(np.abs(a)))

        rec2 = random_instance(seed, kind, n, False)
        a2, _ = build_instance(rec2)
        vals2, _ = jacobi_eigh(comparison_matrix(a2))
        assert np.min(np.abs(vals2)) > 1e-8


def test_random_instance_rejects_unrealizable():
    with pytest.raises(ValueError):
        random_instance(1, ShapeKind.SINGLE_CYCLE, 3, True)
    with pytest.raises(ValueError):
        random_instance(1, ShapeKind.HAS_TRIANGLE, 5, True)


def test_singular_instances_classify_exactly_one():
    for seed in range(8):
        rec = random_instance(seed, ShapeKind.TRIANGLE_FREE_GENERAL, 6, True)
        a, fgen = build_instance(rec)
        census = classify_factorization_count(a)
        assert census.minimal_count is MinimalCount.EXACTLY_ONE
        scale = 1.0 + float(np.max(np.abs(fgen.factor)))
        assert canonical_distance(census.witnesses[0], fgen) <= 1e-7 * scale


def test_brute_force_roots_cycle5():
    roots = brute_force_cycle_roots(cycle5_matrix(2.0))
    assert len(roots) == 1
    assert abs(roots[0] - 1.0) < 1e-6  # tangency point of the unique case

    roots3 = brute_force_cycle_roots(cycle5_matrix(3.0))
    assert len(roots3) == 2
    # golden-ratio pair (3 +/- sqrt(5)) / 2
    np.testing.assert_allclose(
        roots3, [(3 - np.sqrt(5)) / 2, (3 + np.sqrt(5)) / 2], atol=1e-9
    )


def test_brute_force_roots_four_cycle():
    b = np.array(
        [[1.0, 0, 0, 2], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
    )
    assert len(brute_force_cycle_roots(b @ b.T)) == 2  # det M = (1 - 2)^2 = 1


def test_brute_force_roots_match_cycle_factorize():
    # sampling+bisection oracle vs the closed-form quadratic route
    for seed in range(200):
        singular = seed % 2 == 0
        n = 4 + seed % 5  # n in 4..8
        rec = random_instance(seed, ShapeKind.SINGLE_CYCLE, n, singular)
        a, _ = build_instance(rec)
        oracle_roots = brute_force_cycle_roots(a)
        closed_form = cycle_factorize(a)
        assert len(oracle_roots) == len(closed_form), seed


def test_golden_instances(fixtures_dir):
    with open(fixtures_dir / "golden_instances.json") as fh:
        records = json.load(fh)
    assert records, "golden file must not be empty"
    for rec in records:
        regenerated = random_instance(
            rec["seed"], ShapeKind(rec["shape"]), rec["n"], rec["singular_m"]
        )
        assert [list(e) for e in sorted(regenerated.graph.edges)] == rec["recipe"]["edges"]
        np.testing.assert_allclose(
            np.array(regenerated.column_values),
            np.array(rec["recipe"]["column_values"]),
            rtol=1e-15,
        )
        a, _ = build_instance(regenerated)
        census = classify_factorization_count(a)
        assert census.minimal_count.value == rec["census"]["minimal_count"]
        assert census.total_count.value == rec["census"]["total_count"]
        assert census.cp_rank == rec["census"]["cp_rank"]
        if rec["canonical_factorization"] is not None:
            expected = CPFactorization.from_columns(
                [np.array(c) for c in rec["canonical_factorization"]], n=rec["n"]
            )
            assert canonical_distance(canonicalize(census.witnesses[0]), expected) < 1e-12


def test_random_instance_single_vertex_is_diagonal():
    rec = random_instance(3, ShapeKind.TREE, 1, False)
    a, f = build_instance(rec)
    assert a.shape == (1, 1) and a[0, 0] > 0.0
    assert f.num_columns == 1
