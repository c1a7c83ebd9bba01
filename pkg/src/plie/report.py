"""Bit-deterministic report values for the command-line tools.

A report carries the tool version, a digest of the input bytes, a list of
named checks, and optional named tensors flattened to index -> value maps.
JSON rendering uses sorted keys and lowest-terms rational strings, so two
runs over the same input produce byte-identical output. Exit status is 0
when no check FAILed, 1 otherwise; usage and input errors exit 2 before a
report exists.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .forms import FormElement
from .tensor import Tensor

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class CheckLine:
    name: str
    verdict: str  # PASS / FAIL / SKIPPED / "true" / "false"
    witness: dict | None = None


@dataclass(frozen=True)
class Report:
    tool_version: str
    input_name: str
    input_digest: str
    checks: tuple[CheckLine, ...] = ()
    tensors: dict = field(default_factory=dict)

    @property
    def exit_status(self) -> int:
        return 1 if any(c.verdict == FAIL for c in self.checks) else 0


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def flatten_tensor(t: Tensor) -> dict[str, str]:
    """Nonzero entries keyed by 1-based comma-joined indices."""
    return {",".join(str(i + 1) for i in idx): str(v) for idx, v in t.items()}


def flatten_form(f: FormElement) -> dict[str, str]:
    """Nonzero monomials keyed by their (1-based) wedge index tuple."""
    out = {}
    for key, value in f.terms():
        label = ",".join(map(str, key)) if key else "1"
        out[label] = str(value)
    return out


def flatten_form_table(table: dict[tuple[int, ...], FormElement]) -> dict[str, str]:
    """Form-valued tables; keys are "<slot indices>|<wedge indices>"."""
    out = {}
    for slot, form in sorted(table.items()):
        prefix = ",".join(str(i + 1) for i in slot)
        for key, value in form.terms():
            label = ",".join(map(str, key)) if key else "1"
            out[f"{prefix}|{label}"] = str(value)
    return out


def to_json_bytes(report: Report) -> bytes:
    payload = {
        "checks": [
            {"name": c.name, "verdict": c.verdict}
            | ({"witness": c.witness} if c.witness else {})
            for c in report.checks
        ],
        "exit_status": report.exit_status,
        "input": {"digest": report.input_digest, "name": report.input_name},
        "tensors": report.tensors,
        "tool": {"name": "plie", "version": report.tool_version},
    }
    return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode("utf-8")


def to_text(report: Report) -> str:
    lines = [
        f"plie {report.tool_version}",
        f"input: {report.input_name}",
        f"sha256: {report.input_digest}",
    ]
    if report.checks:
        width = max(len(c.name) for c in report.checks)
        lines.append("")
        lines.append(f"{'check'.ljust(width)}  verdict")
        for c in report.checks:
            line = f"{c.name.ljust(width)}  {c.verdict}"
            if c.witness:
                line += f"  witness: {json.dumps(c.witness, sort_keys=True)}"
            lines.append(line)
    for name, entries in sorted(report.tensors.items()):
        lines.append("")
        lines.append(f"{name} ({len(entries)} nonzero)")
        if entries:
            width = max(len(k) for k in entries)
            for key in sorted(entries):
                lines.append(f"  {key.ljust(width)}  {entries[key]}")
    lines.append("")
    lines.append(f"exit: {report.exit_status}")
    return "\n".join(lines) + "\n"


__all__ = [
    "FAIL",
    "PASS",
    "SKIPPED",
    "CheckLine",
    "Report",
    "digest",
    "flatten_form",
    "flatten_form_table",
    "flatten_tensor",
    "to_json_bytes",
    "to_text",
]
