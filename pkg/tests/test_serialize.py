"""File formats and the byte-stable JSON emitter."""

import json

import numpy as np
import pytest

from cpfactor.serialize import (
    FileFormatError,
    factorization_payload,
    load_matrix_file,
    load_vector_file,
    load_zero_basis,
    stable_dumps,
)
from cpfactor import CPFactorization


def test_stable_dumps_is_deterministic_and_parseable():
    payload = {"b": [1.0, 0.1, 3], "a": {"x": True, "y": None, "z": "s"}}
    once = stable_dumps(payload)
    twice = stable_dumps(payload)
    assert once == twice
    assert json.loads(once) == {"b": [1.0, 0.1, 3], "a": {"x": True, "y": None, "z": "s"}}
    assert '"a"' in once and once.index('"a"') < once.index('"b"')


def test_stable_dumps_float_digits():
    out = stable_dumps({"v": 0.1})
    assert "0.10000000000000001" in out
    assert json.loads(out)["v"] == 0.1


def test_stable_dumps_rejects_nonfinite():
    with pytest.raises(ValueError):
        stable_dumps({"v": float("inf")})


def test_load_matrix_file(tmp_path, fixtures_dir):
    a, label = load_matrix_file(fixtures_dir / "cycle5_diag2.json")
    assert label == "cycle5-diag2"
    assert a.shape == (5, 5)

    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "matrix": [[1, 2], [3, 4]]}')
    with pytest.raises(FileFormatError):
        load_matrix_file(bad)  # not symmetric
    load_matrix_file(bad, require_symmetric=False)

    with pytest.raises(FileFormatError):
        load_matrix_file(tmp_path / "missing.json")

    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    with pytest.raises(FileFormatError):
        load_matrix_file(garbled)

    wrong_shape = tmp_path / "shape.json"
    wrong_shape.write_text('{"n": 3, "matrix": [[1, 0], [0, 1]]}')
    with pytest.raises(FileFormatError):
        load_matrix_file(wrong_shape)


def test_load_vector_file(tmp_path, fixtures_dir):
    v, label = load_vector_file(fixtures_dir / "edge_vector_12.json")
    np.testing.assert_array_equal(v, [1.0, 1.0, 0.0, 0.0, 0.0])
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "vector": [1, 2]}')
    with pytest.raises(FileFormatError):
        load_vector_file(bad)


def test_load_zero_basis(tmp_path, fixtures_dir):
    basis = load_zero_basis(fixtures_dir / "horn_zero_basis.json")
    assert basis.n == 5
    np.testing.assert_array_equal(basis.w[:, 0], [1.0, 1.0, 0.0, 0.0, 0.0])

    negative = tmp_path / "neg.json"
    negative.write_text('{"n": 2, "label": "x", "columns": [[1, -1], [0, 1]]}')
    with pytest.raises(FileFormatError):
        load_zero_basis(negative)


def test_factorization_payload_round_trip():
    f = CPFactorization.from_columns([np.array([1.0, 2.0]), np.array([0.5, 0.0])])
    payload = factorization_payload(f, residual=1e-12)
    text = stable_dumps(payload)
    back = json.loads(text)
    rebuilt = CPFactorization.from_columns([np.array(c) for c in back["columns"]])
    np.testing.assert_allclose(rebuilt.factor, f.factor)
    assert back["residual"] <= 1e-11
