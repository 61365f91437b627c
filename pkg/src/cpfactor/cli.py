"""Batch command-line front end.

    cpfactor classify <file> [--tol-sing X] [--tol-rel X]
    cpfactor factorize <file> [--all] [--format json|matrix]
    cpfactor face <file> [--member <vectorfile>]
    cpfactor reduce <file> --zeros horn|<basisfile>
    cpfactor product-condition <file>

Reports go to stdout as deterministic JSON (sorted keys, 17 significant
digits); diagnostics go to stderr.  Exit codes: 0 success, 2 inapplicable
input, 3 parse or I/O error, 4 internal tolerance breakdown.  The
environment variable CPFACTOR_TOL_SING overrides the default singularity
tolerance; explicit flags beat the environment.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .boundary import cycle_product_condition, horn_zero_basis, reduce_by_zeros
from .cp_core import MinimalCount, classify_factorization_count
from .errors import (
    EigensolverError,
    InapplicableMatrixError,
    ToleranceBreakdownError,
)
from .faces import FaceKind, face_membership, minimal_face
from .factorizer import (
    CPFactorization,
    rank2_factorize,
    tree_two_witnesses,
    verify_factorization,
)
from .graph_analysis import ShapeKind, classify_shape, graph_of_matrix
from .matrix_core import Tolerance, rank_with_tol
from .serialize import (
    FileFormatError,
    factorization_payload,
    load_matrix_file,
    load_vector_file,
    load_zero_basis,
    matrix_payload,
    stable_dumps,
)

EXIT_OK = 0
EXIT_INAPPLICABLE = 2
EXIT_PARSE = 3
EXIT_TOLERANCE = 4


def _tolerance_from(args) -> Tolerance:
    sing = args.tol_sing
    if sing is None:
        env = os.environ.get("CPFACTOR_TOL_SING")
        sing = float(env) if env else 1e-8
    rel = args.tol_rel if args.tol_rel is not None else 1e-9
    return Tolerance(rel=rel, sing=sing)


def _emit(report: dict, code: int) -> int:
    report["exit_code"] = code
    print(stable_dumps(report))
    return code


def _witness_payloads(a, witnesses, tol):
    return [
        factorization_payload(w, verify_factorization(a, w, tol)) for w in witnesses
    ]


def _cmd_classify(args) -> int:
    tol = _tolerance_from(args)
    a, label = load_matrix_file(args.file)
    census = classify_factorization_count(a, tol)
    report = {
        "command": "classify",
        "label": label,
        "census": {
            "minimal_count": census.minimal_count.value,
            "total_count": census.total_count.value,
            "cp_rank": census.cp_rank,
            "basis_theorem": census.basis_theorem,
            "margin_warning": census.margin_warning,
        },
        "witnesses": _witness_payloads(a, census.witnesses, tol),
        "warnings": ["near-singular comparison matrix"] if census.margin_warning else [],
    }
    return _emit(report, EXIT_OK)


def _family_payload(fam) -> dict:
    return {
        "pivot_columns": [int(fam.pivot_pair[0]), int(fam.pivot_pair[1])],
        "theta_range": [float(fam.theta_range[0]), float(fam.theta_range[1])],
    }


def _cmd_factorize(args) -> int:
    tol = _tolerance_from(args)
    a, label = load_matrix_file(args.file)
    census = classify_factorization_count(a, tol)
    witnesses = census.witnesses if args.all else census.witnesses[:1]
    report = {
        "command": "factorize",
        "label": label,
        "minimal_count": census.minimal_count.value,
        "cp_rank": census.cp_rank,
        "factorizations": _witness_payloads(a, witnesses, tol),
        "warnings": [],
    }
    if args.all and census.minimal_count is MinimalCount.INFINITELY_MANY:
        shape = classify_shape(graph_of_matrix(a, tol))
        if rank_with_tol(a, tol) == 2:
            fam = rank2_factorize(a, tol)
            if not isinstance(fam, CPFactorization):
                report["family"] = _family_payload(fam)
        elif shape.kind is ShapeKind.TREE:
            _, _, fam = tree_two_witnesses(a, tol)
            report["family"] = _family_payload(fam)
    if args.format == "matrix":
        lines = [f"# {label}: {len(report['factorizations'])} factorization(s)"]
        for idx, payload in enumerate(report["factorizations"]):
            lines.append(f"# factorization {idx}, residual {payload['residual']:.17g}")
            cols = np.array(payload["columns"]).T  # rows = vertices
            for row in cols:
                lines.append(" ".join(format(x, ".17g") for x in row))
        print("\n".join(lines))
        return EXIT_OK
    return _emit(report, EXIT_OK)


def _cmd_face(args) -> int:
    tol = _tolerance_from(args)
    a, label = load_matrix_file(args.file)
    report = {"command": "face", "label": label, "warnings": []}
    if args.member:
        vec, _ = load_vector_file(args.member)
        report["member"] = bool(face_membership(a, vec, tol))
    else:
        face = minimal_face(a, tol)
        report["face"] = {
            "kind": "polyhedral" if face.kind is FaceKind.POLYHEDRAL_GENERATORS else "implicit",
            "generators": [[float(x) for x in g] for g in face.generators],
        }
    return _emit(report, EXIT_OK)


def _cmd_reduce(args) -> int:
    import warnings

    tol = _tolerance_from(args)
    a, label = load_matrix_file(args.file)
    if args.zeros == "horn":
        basis = horn_zero_basis()
    else:
        basis = load_zero_basis(args.zeros)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        c = reduce_by_zeros(a, basis, tol)
    report = {
        "command": "reduce",
        "label": label,
        "zero_basis": basis.source_label,
        "reduced": matrix_payload(c),
        "warnings": sorted(str(w.message) for w in caught),
    }
    return _emit(report, EXIT_OK)


def _cmd_product_condition(args) -> int:
    tol = _tolerance_from(args)
    b, label = load_matrix_file(args.file, require_symmetric=False)
    result = cycle_product_condition(b, tol)
    report = {
        "command": "product-condition",
        "label": label,
        "products_equal": result.products_equal,
        "unique_factorization": result.products_equal,
        "det_comparison_matrix": result.det_value,
        "diag_product": result.diag_product,
        "cycle_product": result.cycle_product,
        "warnings": [],
    }
    return _emit(report, EXIT_OK)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpfactor",
        description="Complete positivity census, factorizations, faces and "
        "boundary reductions for matrices with triangle-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", type=Path, help="matrix JSON file")
        p.add_argument("--tol-sing", type=float, default=None,
                       help="singularity threshold (default 1e-8 or $CPFACTOR_TOL_SING)")
        p.add_argument("--tol-rel", type=float, default=None,
                       help="relative accuracy threshold (default 1e-9)")

    p = sub.add_parser("classify", help="factorization-count census")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("factorize", help="construct CP factorizations")
    common(p)
    p.add_argument("--all", action="store_true",
                   help="emit every enumerated factorization and, where "
                        "infinitely many exist, the rotation family")
    p.add_argument("--format", choices=("json", "matrix"), default="json")
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("face", help="minimal face of the CP cone")
    common(p)
    p.add_argument("--member", type=Path, default=None,
                   help="vector JSON file: test membership of b b^T instead")
    p.set_defaults(func=_cmd_face)

    p = sub.add_parser("reduce", help="conjugate through a zero basis")
    common(p)
    p.add_argument("--zeros", required=True,
                   help="'horn' for the built-in basis, or a basis JSON file")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("product-condition",
                       help="uniqueness test for a cyclic two-diagonal factor")
    common(p)
    p.set_defaults(func=_cmd_product_condition)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except FileFormatError as exc:
        print(f"cpfactor: {exc}", file=sys.stderr)
        code = _emit({"command": args.command, "error": str(exc)}, EXIT_PARSE)
    except (InapplicableMatrixError, ValueError) as exc:
        print(f"cpfactor: {exc}", file=sys.stderr)
        code = _emit({"command": args.command, "error": str(exc)}, EXIT_INAPPLICABLE)
    except (ToleranceBreakdownError, EigensolverError) as exc:
        print(f"cpfactor: {exc}", file=sys.stderr)
        code = _emit({"command": args.command, "error": str(exc)}, EXIT_TOLERANCE)
    return code


if __name__ == "__main__":
    sys.exit(main())
