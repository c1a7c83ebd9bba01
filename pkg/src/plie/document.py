"""Spec-file parsing, canonical serialization, and the doubling emitter.

Documents are UTF-8 JSON with 1-based basis indices:

.. code-block:: json

    {
      "dim": 3,
      "g_bracket": [],
      "gstar_bracket": [{"i": 1, "j": 2, "out": {"3": "lambda"}}],
      "metric": [["1","0","0"],["0","1","0"],["0","0","1"]],
      "metric_side": "contravariant",
      "name": "r3-lambda",
      "params": {"lambda": "-1"}
    }

Coefficients are rational strings ("p" or "p/q"), optionally scaled by a
named parameter: "param", "-param", or "param*p/q" (the multiplier carries
the sign). Parameters are resolved at parse time; there is no symbolic mode.
Serialization is byte-deterministic: sorted keys, two-space indent, bracket
entries ordered by (i, j), lowest-terms rationals.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidInputError,
    ParseError,
    SingularMatrixError,
    ValidationError,
)
from .lie import (
    LieAlgebra,
    LieBialgebra,
    cocycle_defect,
    dual_semidirect_double,
    jacobi_defect,
    semidirect_double,
)
from .metric import MetricForm, complete_lift_metric, contravariant_from_covariant
from .rationals import format_rational, parse_rational

_PARAM_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_EXPR_RE = re.compile(
    r"^(?P<sign>-)?(?P<param>[A-Za-z_][A-Za-z0-9_]*)(\*(?P<mult>-?\d+(/[1-9]\d*)?))?$"
)

METRIC_SIDES = ("covariant", "contravariant")


@dataclass(frozen=True)
class Coefficient:
    """A rational coefficient, optionally scaled by a named parameter."""

    param: str | None
    multiplier: Fraction

    def resolve(self, params: dict[str, Fraction]) -> Fraction:
        if self.param is None:
            return self.multiplier
        if self.param not in params:
            raise ValidationError(f"unknown parameter {self.param!r}")
        return params[self.param] * self.multiplier

    def render(self) -> str:
        if self.param is None:
            return format_rational(self.multiplier)
        if self.multiplier == 1:
            return self.param
        if self.multiplier == -1:
            return f"-{self.param}"
        return f"{self.param}*{format_rational(self.multiplier)}"

    @classmethod
    def parse(cls, text: str, where: str) -> "Coefficient":
        if not isinstance(text, str):
            raise ValidationError(f"{where}: coefficient must be a string, got {type(text).__name__}")
        try:
            return cls(None, parse_rational(text))
        except InvalidInputError:
            pass
        match = _EXPR_RE.match(text)
        if not match:
            raise ValidationError(f"{where}: malformed coefficient {text!r}")
        mult = parse_rational(match.group("mult")) if match.group("mult") else Fraction(1)
        if match.group("sign"):
            mult = -mult
        return cls(match.group("param"), mult)


@dataclass(frozen=True)
class BracketEntry:
    i: int  # 1-based, i < j
    j: int
    out: tuple[tuple[int, Coefficient], ...]  # (1-based component, coefficient)


@dataclass(frozen=True)
class SpecDocument:
    """A parsed, parameter-resolved, validated input document."""

    name: str
    dim: int
    params: dict[str, Fraction]
    g_entries: tuple[BracketEntry, ...]
    gstar_entries: tuple[BracketEntry, ...]
    metric_entries: tuple[tuple[Coefficient, ...], ...]
    metric_side: str

    def _algebra(self, entries: tuple[BracketEntry, ...]) -> LieAlgebra:
        table: dict[tuple[int, int], list[Fraction]] = {}
        for entry in entries:
            row = table.setdefault((entry.i - 1, entry.j - 1), [Fraction(0)] * self.dim)
            for component, coeff in entry.out:
                row[component - 1] += coeff.resolve(self.params)
        return LieAlgebra(self.dim, table)

    def g_algebra(self) -> LieAlgebra:
        return self._algebra(self.g_entries)

    def gstar_algebra(self) -> LieAlgebra:
        return self._algebra(self.gstar_entries)

    def bialgebra(self, validate: bool = True) -> LieBialgebra:
        return LieBialgebra(self.g_algebra(), self.gstar_algebra(), validate=validate)

    def stored_metric(self) -> MetricForm:
        rows = [[c.resolve(self.params) for c in row] for row in self.metric_entries]
        return MetricForm(rows)

    def metrics(self) -> tuple[MetricForm, MetricForm]:
        """(dual-side form, base-side form): the stored matrix and its inverse,
        assigned according to ``metric_side``."""
        stored = self.stored_metric()
        other = contravariant_from_covariant(stored)
        if self.metric_side == "contravariant":
            return stored, other
        return other, stored


def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ValidationError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise ValidationError(f"{where}: field {key!r} has the wrong type")
    return value


def _parse_bracket(raw, dim: int, where: str) -> tuple[BracketEntry, ...]:
    if not isinstance(raw, list):
        raise ValidationError(f"{where}: must be a list")
    entries: list[BracketEntry] = []
    seen: set[tuple[int, int]] = set()
    for pos, item in enumerate(raw):
        spot = f"{where}[{pos}]"
        if not isinstance(item, dict):
            raise ValidationError(f"{spot}: must be an object")
        i = _require(item, "i", int, spot)
        j = _require(item, "j", int, spot)
        out = _require(item, "out", dict, spot)
        if not (1 <= i < j <= dim):
            raise ValidationError(f"{spot}: need 1 <= i < j <= {dim}, got ({i}, {j})")
        if (i, j) in seen:
            raise ValidationError(f"{spot}: duplicate pair ({i}, {j})")
        seen.add((i, j))
        components: list[tuple[int, Coefficient]] = []
        for key, text in out.items():
            try:
                component = int(key)
            except (TypeError, ValueError):
                raise ValidationError(f"{spot}: component key {key!r} is not an integer")
            if not 1 <= component <= dim:
                raise ValidationError(f"{spot}: component {component} out of range 1..{dim}")
            components.append((component, Coefficient.parse(text, spot)))
        components.sort(key=lambda c: c[0])
        entries.append(BracketEntry(i, j, tuple(components)))
    entries.sort(key=lambda e: (e.i, e.j))
    return tuple(entries)


def parse_spec(
    text: bytes | str,
    param_overrides: dict[str, Fraction] | None = None,
    validate: bool = True,
) -> SpecDocument:
    """Parse and resolve a document; optionally run the validity gate.

    Malformed JSON raises :class:`ParseError` with the byte offset; schema or
    math failures raise :class:`ValidationError` naming the defect entry.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not UTF-8", exc.start) from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(raw, dict):
        raise ValidationError("document root must be an object")

    name = _require(raw, "name", str, "document")
    dim = _require(raw, "dim", int, "document")
    if dim < 1:
        raise ValidationError("document: dim must be a positive integer")
    metric_side = _require(raw, "metric_side", str, "document")
    if metric_side not in METRIC_SIDES:
        raise ValidationError(
            f"document: metric_side must be one of {METRIC_SIDES}, got {metric_side!r}"
        )

    params_raw = raw.get("params", {})
    if not isinstance(params_raw, dict):
        raise ValidationError("document: params must be an object")
    params: dict[str, Fraction] = {}
    for key, value in params_raw.items():
        if not _PARAM_RE.match(str(key)):
            raise ValidationError(f"params: bad parameter name {key!r}")
        try:
            params[key] = parse_rational(value)
        except InvalidInputError as exc:
            raise ValidationError(f"params[{key}]: {exc}") from exc
    for key, value in (param_overrides or {}).items():
        if key not in params:
            raise ValidationError(f"override names unknown parameter {key!r}")
        params[key] = Fraction(value)

    g_entries = _parse_bracket(raw.get("g_bracket", []), dim, "g_bracket")
    gstar_entries = _parse_bracket(raw.get("gstar_bracket", []), dim, "gstar_bracket")

    metric_raw = _require(raw, "metric", list, "document")
    if len(metric_raw) != dim or any(
        not isinstance(row, list) or len(row) != dim for row in metric_raw
    ):
        raise ValidationError(f"metric: must be a {dim}x{dim} matrix")
    metric_entries = tuple(
        tuple(Coefficient.parse(cell, f"metric[{r}][{c}]") for c, cell in enumerate(row))
        for r, row in enumerate(metric_raw)
    )

    doc = SpecDocument(name, dim, params, g_entries, gstar_entries, metric_entries, metric_side)
    # resolve everything now so unknown-parameter errors surface even when the
    # math validity gate is deferred
    doc.g_algebra()
    doc.gstar_algebra()
    for row in metric_entries:
        for cell in row:
            cell.resolve(params)
    if validate:
        validate_document(doc)
    return doc


def validate_document(doc: SpecDocument) -> None:
    """Jacobi on both brackets, the cocycle condition, and metric
    symmetry/nondegeneracy; failures carry the witness entry."""
    for label, alg in (("g_bracket", doc.g_algebra()), ("gstar_bracket", doc.gstar_algebra())):
        hit = jacobi_defect(alg).first_nonzero()
        if hit is not None:
            idx, value = hit
            raise ValidationError(
                f"{label}: Jacobi identity fails at basis triple "
                f"({idx[0] + 1},{idx[1] + 1},{idx[2] + 1}), component {idx[3] + 1} = {value}",
                detail={
                    "defect": f"jacobi_{label}",
                    "index": [i + 1 for i in idx],
                    "value": str(value),
                },
            )
    bi = LieBialgebra(doc.g_algebra(), doc.gstar_algebra(), validate=False)
    hit = cocycle_defect(bi).first_nonzero()
    if hit is not None:
        idx, value = hit
        raise ValidationError(
            "cocycle condition fails at basis pair "
            f"({idx[0] + 1},{idx[1] + 1}), bivector component ({idx[2] + 1},{idx[3] + 1}) = {value}",
            detail={"defect": "cocycle", "index": [i + 1 for i in idx], "value": str(value)},
        )
    try:
        doc.stored_metric()
    except SingularMatrixError as exc:
        raise ValidationError(
            f"metric: singular over Q (rank {exc.rank})", detail={"defect": "metric_rank"}
        ) from exc
    except InvalidInputError as exc:
        raise ValidationError(f"metric: {exc}", detail={"defect": "metric_shape"}) from exc


def document_to_dict(doc: SpecDocument) -> dict:
    def bracket_list(entries: tuple[BracketEntry, ...]) -> list:
        return [
            {
                "i": e.i,
                "j": e.j,
                "out": {str(component): coeff.render() for component, coeff in e.out},
            }
            for e in entries
        ]

    return {
        "dim": doc.dim,
        "g_bracket": bracket_list(doc.g_entries),
        "gstar_bracket": bracket_list(doc.gstar_entries),
        "metric": [[c.render() for c in row] for row in doc.metric_entries],
        "metric_side": doc.metric_side,
        "name": doc.name,
        "params": {k: format_rational(v) for k, v in sorted(doc.params.items())},
    }


def serialize_document(doc: SpecDocument) -> bytes:
    """Canonical bytes: sorted keys, two-space indent, trailing newline."""
    return (json.dumps(document_to_dict(doc), sort_keys=True, indent=2) + "\n").encode("utf-8")


def _entries_from_table(alg: LieAlgebra) -> tuple[BracketEntry, ...]:
    entries = []
    for (i, j), row in sorted(alg.table.items()):
        out = tuple(
            (k + 1, Coefficient(None, value)) for k, value in enumerate(row) if value
        )
        entries.append(BracketEntry(i + 1, j + 1, out))
    return tuple(entries)


def emit_double(doc: SpecDocument) -> SpecDocument:
    """Document for the tangent double: semidirect base bracket,
    dual-semidirect dual bracket, completely lifted metric, same side.

    Parameters are already resolved, so the output carries none. The result
    passes the validity gate by construction; it is validated anyway.
    """
    g2 = semidirect_double(doc.g_algebra())
    gstar2 = dual_semidirect_double(doc.gstar_algebra())
    lifted = complete_lift_metric(doc.stored_metric())
    metric_entries = tuple(
        tuple(Coefficient(None, v) for v in row) for row in lifted.matrix
    )
    double = SpecDocument(
        name=f"{doc.name}-double",
        dim=2 * doc.dim,
        params={},
        g_entries=_entries_from_table(g2),
        gstar_entries=_entries_from_table(gstar2),
        metric_entries=metric_entries,
        metric_side=doc.metric_side,
    )
    validate_document(double)
    return double


__all__ = [
    "BracketEntry",
    "Coefficient",
    "SpecDocument",
    "document_to_dict",
    "emit_double",
    "parse_spec",
    "serialize_document",
    "validate_document",
]
