"""JSON file formats and byte-stable serialization for the CLI.

Matrix file:      {"n": int, "matrix": [[...], ...], "label": str?}
Vector file:      {"n": int, "vector": [...], "label": str?}
Zero-basis file:  {"n": int, "label": str, "columns": [[...], ...]}

``stable_dumps`` emits keys sorted and every float with 17 significant
digits, so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import json

import numpy as np

from .boundary import ZeroBasis
from .factorizer import CPFactorization


class FileFormatError(Exception):
    """Input file missing, unparseable, or violating its schema."""


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from exc


def _as_grid(raw, n, what):
    try:
        grid = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"{what} is not a numeric grid") from exc
    if grid.shape != (n, n):
        raise FileFormatError(f"{what} shape {grid.shape} does not match n={n}")
    if not np.all(np.isfinite(grid)):
        raise FileFormatError(f"{what} has non-finite entries")
    return grid


def load_matrix_file(path, require_symmetric: bool = True):
    """Returns (matrix, label).  Symmetry is enforced within 1e-12 absolute
    unless the caller opts out (factor matrices are not symmetric)."""
    data = _load_json(path)
    if not isinstance(data, dict) or "n" not in data or "matrix" not in data:
        raise FileFormatError(f"{path}: expected keys 'n' and 'matrix'")
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise FileFormatError(f"{path}: 'n' must be a positive integer")
    grid = _as_grid(data["matrix"], n, f"{path}: 'matrix'")
    if require_symmetric and float(np.max(np.abs(grid - grid.T))) > 1e-12:
        raise FileFormatError(f"{path}: matrix is not symmetric within 1e-12")
    label = data.get("label") or "unlabeled"
    return grid, str(label)


def load_vector_file(path):
    data = _load_json(path)
    if not isinstance(data, dict) or "n" not in data or "vector" not in data:
        raise FileFormatError(f"{path}: expected keys 'n' and 'vector'")
    n = data["n"]
    try:
        vec = np.array(data["vector"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"{path}: 'vector' is not numeric") from exc
    if vec.shape != (n,):
        raise FileFormatError(f"{path}: vector length does not match n={n}")
    return vec, str(data.get("label") or "unlabeled")


def load_zero_basis(path) -> ZeroBasis:
    data = _load_json(path)
    if not isinstance(data, dict) or "n" not in data or "columns" not in data:
        raise FileFormatError(f"{path}: expected keys 'n' and 'columns'")
    n = data["n"]
    cols = data["columns"]
    if not isinstance(cols, list) or len(cols) != n:
        raise FileFormatError(f"{path}: expected exactly {n} zero columns")
    grid = _as_grid(cols, n, f"{path}: 'columns'").T  # rows in file -> columns
    try:
        return ZeroBasis(w=grid, source_label=str(data.get("label") or "user-supplied"))
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


def matrix_payload(a: np.ndarray):
    a = np.asarray(a, dtype=float)
    return {"n": int(a.shape[0]), "matrix": [[float(x) for x in row] for row in a]}


def factorization_payload(f: CPFactorization, residual: float):
    return {
        "num_columns": int(f.num_columns),
        "columns": [[float(x) for x in col] for col in f.columns],
        "residual": float(residual),
    }


def _format_scalar(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if not np.isfinite(v):
            raise ValueError("cannot serialize non-finite numbers")
        return format(v, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value)!r}")


def _stable(obj, indent: int, pieces: list) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            pieces.append("{}")
            return
        pieces.append("{\n")
        keys = sorted(obj)
        for i, key in enumerate(keys):
            if not isinstance(key, str):
                raise TypeError("JSON object keys must be strings")
            pieces.append(f"{inner}{json.dumps(key)}: ")
            _stable(obj[key], indent + 1, pieces)
            pieces.append(",\n" if i < len(keys) - 1 else "\n")
        pieces.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        seq = list(obj)
        if not seq:
            pieces.append("[]")
            return
        pieces.append("[\n")
        for i, item in enumerate(seq):
            pieces.append(inner)
            _stable(item, indent + 1, pieces)
            pieces.append(",\n" if i < len(seq) - 1 else "\n")
        pieces.append(pad + "]")
    else:
        pieces.append(_format_scalar(obj))


def stable_dumps(obj) -> str:
    """Deterministic JSON: sorted keys, 17-significant-digit floats."""
    pieces: list = []
    _stable(obj, 0, pieces)
    return "".join(pieces)
