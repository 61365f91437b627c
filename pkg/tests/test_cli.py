"""End-to-end CLI runs against the bundled fixture files."""

import json
import subprocess
import sys

import numpy as np
import pytest

FIX = None  # populated by the fixture below


@pytest.fixture(autouse=True)
def _fixdir(fixtures_dir):
    global FIX
    FIX = fixtures_dir


def run_cli(*args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "cpfactor", *map(str, args)],
        capture_output=True,
        text=True,
        env=full_env,
    )
    return proc


def test_classify_unique_cycle():
    proc = run_cli("classify", FIX / "cycle5_diag2.json")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["census"]["minimal_count"] == "exactly_one"
    assert report["census"]["total_count"] == "exactly_one"
    assert report["census"]["cp_rank"] == 5
    assert report["exit_code"] == 0
    assert len(report["witnesses"]) == 1
    assert report["witnesses"][0]["residual"] <= 1e-10


def test_classify_two_cycle():
    proc = run_cli("classify", FIX / "cycle5_diag3.json")
    report = json.loads(proc.stdout)
    assert report["census"]["minimal_count"] == "exactly_two"


def test_classify_triangle_exits_2():
    proc = run_cli("classify", FIX / "circulant_851.json")
    assert proc.returncode == 2
    assert "triangle" in proc.stderr


def test_classify_parse_error_exits_3(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    proc = run_cli("classify", bad)
    assert proc.returncode == 3


def test_factorize_unique_matches_zero_basis():
    proc = run_cli("factorize", FIX / "cycle5_diag2.json")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    cols = sorted(tuple(np.round(c, 9)) for c in report["factorizations"][0]["columns"])
    expected = sorted(
        tuple(col)
        for col in np.array(json.load(open(FIX / "horn_zero_basis.json"))["columns"], float)
    )
    assert np.allclose(np.array(cols), np.array(expected), atol=1e-9)


def test_factorize_all_emits_family(tmp_path):
    matrix = tmp_path / "edge.json"
    matrix.write_text('{"n": 2, "label": "edge", "matrix": [[2, 1], [1, 2]]}')
    proc = run_cli("factorize", matrix, "--all")
    report = json.loads(proc.stdout)
    assert report["minimal_count"] == "infinitely_many"
    assert len(report["factorizations"]) == 2
    assert "family" in report
    lo, hi = report["family"]["theta_range"]
    assert lo < hi


def test_factorize_matrix_format():
    proc = run_cli("factorize", FIX / "cycle5_diag2.json", "--format", "matrix")
    assert proc.returncode == 0
    assert proc.stdout.startswith("#")


def test_face_generators_and_membership():
    proc = run_cli("face", FIX / "cycle5_diag2.json")
    report = json.loads(proc.stdout)
    assert report["face"]["kind"] == "polyhedral"
    assert len(report["face"]["generators"]) == 5

    member = run_cli("face", FIX / "cycle5_diag2.json", "--member", FIX / "edge_vector_12.json")
    assert json.loads(member.stdout)["member"] is True
    nonmember = run_cli("face", FIX / "cycle5_diag2.json", "--member", FIX / "unit_vector_1.json")
    assert json.loads(nonmember.stdout)["member"] is False

    implicit = run_cli("face", FIX / "cycle5_diag3.json")
    assert json.loads(implicit.stdout)["face"]["kind"] == "implicit"


def test_reduce_horn_pair():
    proc = run_cli("reduce", FIX / "circulant_851.json", "--zeros", "horn")
    report = json.loads(proc.stdout)
    expected = np.array(json.load(open(FIX / "cycle5_diag3.json"))["matrix"], float)
    got = np.array(report["reduced"]["matrix"])
    assert np.max(np.abs(got - expected)) <= 1e-9

    proc2 = run_cli("reduce", FIX / "circulant_641.json", "--zeros", str(FIX / "horn_zero_basis.json"))
    got2 = np.array(json.loads(proc2.stdout)["reduced"]["matrix"])
    expected2 = np.array(json.load(open(FIX / "cycle5_diag2.json"))["matrix"], float)
    assert np.max(np.abs(got2 - expected2)) <= 1e-9


def test_product_condition():
    proc = run_cli("product-condition", FIX / "cyclic_factor_4.json")
    report = json.loads(proc.stdout)
    assert report["products_equal"] is False
    assert report["det_comparison_matrix"] == 1.0


def test_byte_stable_output():
    first = run_cli("classify", FIX / "cycle5_diag2.json").stdout
    second = run_cli("classify", FIX / "cycle5_diag2.json").stdout
    assert first == second


def test_env_var_tolerance_override(tmp_path):
    # a slightly perturbed singular matrix flips to 'unique' under a looser
    # singularity tolerance supplied via the environment
    a = np.array(json.load(open(FIX / "cycle5_diag2.json"))["matrix"], float)
    a = a + 1e-5 * np.eye(5)
    f = tmp_path / "perturbed.json"
    f.write_text(json.dumps({"n": 5, "label": "p", "matrix": a.tolist()}))
    strict = json.loads(run_cli("classify", f).stdout)
    loose = json.loads(run_cli("classify", f, env={"CPFACTOR_TOL_SING": "1e-2"}).stdout)
    assert strict["census"]["minimal_count"] == "exactly_two"
    assert loose["census"]["minimal_count"] == "exactly_one"


def test_emitted_factorization_reverifies_on_load():
    from cpfactor import CPFactorization, verify_factorization

    proc = run_cli("factorize", FIX / "cycle5_diag3.json", "--all")
    report = json.loads(proc.stdout)
    a = np.array(json.load(open(FIX / "cycle5_diag3.json"))["matrix"], float)
    assert len(report["factorizations"]) == 2
    for payload in report["factorizations"]:
        f = CPFactorization.from_columns([np.array(c) for c in payload["columns"]])
        assert verify_factorization(a, f) <= 1e-8
