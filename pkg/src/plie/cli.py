"""Command-line interface.

Subcommands::

    plie check FILE             validity gate with verdict lines
    plie connection FILE        connection coefficients + defining defects
    plie curvature FILE         curvature, its covariant derivative, verdicts
    plie hawkins FILE           pre-Poisson table, metacurvature, metaflatness
    plie classify FILE          flat / locally symmetric / metaflat / prla / prpl
    plie double FILE            emit the tangent-double document
    plie verify-tangent FILE    structure-theorem suite on the double
    plie catalog list|show NAME

``FILE`` is a path or the name of a catalog entry. Global flags:
``--format json|text``, ``--param NAME=RATIONAL`` (repeatable), ``--out PATH``.
Exit codes: 0 all checks pass, 1 a check failed (report carries a witness),
2 invalid input or usage.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .catalog import catalog_bytes, catalog_names, resolve_input
from .document import emit_double, parse_spec, serialize_document, validate_document
from .errors import PlieError, ValidationError
from .hawkins import InvariantComplex, is_metaflat, metacurvature
from .lie import cocycle_defect, jacobi_defect
from .metric import (
    curvature,
    levi_civita,
    metric_parallel_defect,
    nabla_curvature,
    prla_defect,
    prpl_abelian_base_check,
    torsion_defect,
)
from .rationals import parse_rational
from .report import (
    FAIL,
    PASS,
    SKIPPED,
    CheckLine,
    Report,
    digest,
    flatten_form_table,
    flatten_tensor,
    to_json_bytes,
    to_text,
)
from .tangent import verify_all


def _parse_params(pairs: list[str]) -> dict[str, Fraction]:
    params: dict[str, Fraction] = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise ValidationError(f"--param expects NAME=RATIONAL, got {pair!r}")
        params[name] = parse_rational(value)
    return params


def _defect_check(name: str, tensor) -> CheckLine:
    hit = tensor.first_nonzero()
    if hit is None:
        return CheckLine(name, PASS)
    idx, value = hit
    return CheckLine(name, FAIL, {"index": [i + 1 for i in idx], "value": str(value)})


def _bool_check(name: str, value: bool) -> CheckLine:
    return CheckLine(name, "true" if value else "false")


def _cmd_check(doc, args) -> Report:
    checks = [
        _defect_check("jacobi_g", jacobi_defect(doc.g_algebra())),
        _defect_check("jacobi_gstar", jacobi_defect(doc.gstar_algebra())),
        _defect_check("cocycle", cocycle_defect(doc.bialgebra(validate=False))),
    ]
    try:
        doc.stored_metric()
        checks.append(CheckLine("metric_nondegenerate", PASS))
    except PlieError as exc:
        checks.append(CheckLine("metric_nondegenerate", FAIL, {"error": str(exc)}))
    return Report(__version__, args.input_name, args.input_digest, tuple(checks))


def _cmd_connection(doc, args) -> Report:
    bi = doc.bialgebra()
    a, _ = doc.metrics()
    conn = levi_civita(bi.gstar, a)
    checks = (
        _defect_check("torsion_free", torsion_defect(conn, bi.gstar)),
        _defect_check("metric_parallel", metric_parallel_defect(conn, a)),
    )
    tensors = {"connection": flatten_tensor(conn.gamma)}
    return Report(__version__, args.input_name, args.input_digest, checks, tensors)


def _cmd_curvature(doc, args) -> Report:
    bi = doc.bialgebra()
    a, _ = doc.metrics()
    conn = levi_civita(bi.gstar, a)
    r = curvature(conn, bi.gstar)
    nabla = nabla_curvature(conn, r, bi.gstar)
    checks = (
        _bool_check("flat", r.is_zero()),
        _bool_check("locally_symmetric", nabla.is_zero()),
    )
    tensors = {
        "curvature": flatten_tensor(r.tensor),
        "curvature_derivative": flatten_tensor(nabla),
    }
    return Report(__version__, args.input_name, args.input_digest, checks, tensors)


def _cmd_hawkins(doc, args) -> Report:
    bi = doc.bialgebra()
    a, _ = doc.metrics()
    cx = InvariantComplex.from_bialgebra(bi, a)
    meta = metacurvature(cx)
    n = bi.dim
    from .forms import FormElement
    from .hawkins import pre_poisson_bracket

    pre = {
        (i, j): pre_poisson_bracket(
            cx, FormElement.basis_covector(n, i + 1), FormElement.basis_covector(n, j + 1)
        )
        for i in range(n)
        for j in range(n)
    }
    checks = (_bool_check("metaflat", meta.is_zero()),)
    tensors = {
        "metacurvature": flatten_form_table(meta.entries),
        "pre_poisson": flatten_form_table(pre),
    }
    return Report(__version__, args.input_name, args.input_digest, checks, tensors)


def _cmd_classify(doc, args) -> Report:
    bi = doc.bialgebra()
    a, _ = doc.metrics()
    conn = levi_civita(bi.gstar, a)
    r = curvature(conn, bi.gstar)
    nabla = nabla_curvature(conn, r, bi.gstar)
    cx = InvariantComplex.from_bialgebra(bi, a)
    checks = [
        _bool_check("flat", r.is_zero()),
        _bool_check("locally_symmetric", nabla.is_zero()),
        _bool_check("metaflat", is_metaflat(cx)),
        _defect_check("prla", prla_defect(bi.gstar, a)),
    ]
    if bi.g.is_abelian():
        verdict = prpl_abelian_base_check(bi, a)
        checks.append(
            CheckLine("prpl_abelian_base", PASS if verdict.passed else FAIL, verdict.witness)
        )
    else:
        checks.append(
            CheckLine(
                "prpl_abelian_base",
                SKIPPED,
                {"reason": "base bracket is not abelian; use the pointwise defect"},
            )
        )
    return Report(__version__, args.input_name, args.input_digest, tuple(checks))


def _cmd_verify_tangent(doc, args) -> Report:
    bi = doc.bialgebra()
    a, am = doc.metrics()
    checks = []
    for rep in verify_all(bi, a, am):
        witness = None
        if rep.witnesses:
            w = rep.witnesses[0]
            witness = {"index": list(w.indices), "lhs": w.lhs, "rhs": w.rhs}
        checks.append(CheckLine(rep.statement, PASS if rep.passed else FAIL, witness))
    if not bi.g.is_abelian():
        checks.append(
            CheckLine(
                "abelian_compatibility",
                SKIPPED,
                {"reason": "base bracket is not abelian"},
            )
        )
    return Report(__version__, args.input_name, args.input_digest, tuple(checks))


def _emit(args, payload: bytes) -> None:
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))


def _report_out(args, report: Report) -> int:
    payload = to_json_bytes(report) if args.format == "json" else to_text(report).encode("utf-8")
    _emit(args, payload)
    return report.exit_status


_DOC_COMMANDS = {
    "check": _cmd_check,
    "connection": _cmd_connection,
    "curvature": _cmd_curvature,
    "hawkins": _cmd_hawkins,
    "classify": _cmd_classify,
    "verify-tangent": _cmd_verify_tangent,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plie",
        description="Exact verification of metric Lie bialgebra geometry and tangent doubles.",
    )
    parser.add_argument("--version", action="version", version=f"plie {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=RATIONAL",
        help="override a document parameter (repeatable)",
    )
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("check", "run the validity gate"),
        ("connection", "connection coefficients and defining defects"),
        ("curvature", "curvature tensors and verdicts"),
        ("hawkins", "pre-Poisson brackets and metacurvature"),
        ("classify", "geometric classification and compatibility"),
        ("verify-tangent", "tangent-double structure theorems"),
        ("double", "emit the tangent-double document"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("input", metavar="FILE", help="document path or catalog entry name")

    cat = sub.add_parser("catalog", parents=[common], help="built-in catalog access")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    cat_sub.add_parser("list", parents=[common])
    show = cat_sub.add_parser("show", parents=[common])
    show.add_argument("name", metavar="NAME")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "catalog":
            if args.catalog_command == "list":
                names = catalog_names()
                if args.format == "json":
                    import json

                    payload = (json.dumps({"catalog": names}, indent=2) + "\n").encode("utf-8")
                else:
                    payload = ("".join(f"{n}\n" for n in names) or "(empty)\n").encode("utf-8")
                _emit(args, payload)
                return 0
            _emit(args, catalog_bytes(args.name))
            return 0

        params = _parse_params(args.param)
        display, data = resolve_input(args.input)
        args.input_name = display
        args.input_digest = digest(data)

        if args.command == "double":
            doc = parse_spec(data, params)
            _emit(args, serialize_document(emit_double(doc)))
            return 0

        if args.command == "check":
            # schema errors are invalid input; math defects become FAIL verdicts
            doc = parse_spec(data, params, validate=False)
            report = _cmd_check(doc, args)
            return _report_out(args, report)

        doc = parse_spec(data, params)
        report = _DOC_COMMANDS[args.command](doc, args)
        return _report_out(args, report)
    except PlieError as exc:
        print(f"plie: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
