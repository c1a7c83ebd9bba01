"""Deterministic brute-force searches used to pin catalog fixtures.

Two searches are provided:

* metrics with entries in {-1, 0, 1} making a given bracket a
  pseudo-Riemannian Lie algebra (used for the 3-dimensional nilpotent
  example, whose published claim names no metric);
* small Lie bialgebras with BOTH brackets nonzero, over integer structure
  constants in {-1, 0, 1} for dimensions 2 and 3, optionally filtered to
  entries whose pre-Poisson bracket is not identically zero.

Enumeration orders are fixed and documented so the frozen catalog entries are
reproducible: coefficient slots are filled in row-major order, values tried
in (-1, 0, 1) order, candidates visited by ascending support size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularMatrixError, ValidationError
from .forms import FormElement
from .hawkins import InvariantComplex, pre_poisson_bracket
from .lie import LieAlgebra, LieBialgebra, cocycle_defect, jacobi_defect
from .metric import MetricForm, prla_defect

_VALUES = (Fraction(-1), Fraction(0), Fraction(1))


def pseudo_riemannian_metrics(alg: LieAlgebra, limit: int | None = None) -> list[MetricForm]:
    """All symmetric nondegenerate {-1,0,1} metrics with zero
    pseudo-Riemannian defect for ``alg``, in enumeration order.

    Upper-triangle slots (including the diagonal) are filled row-major;
    values are tried in (-1, 0, 1) order. ``limit`` truncates the result.
    """
    n = alg.dim
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    found: list[MetricForm] = []
    for values in itertools.product(_VALUES, repeat=len(slots)):
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in zip(slots, values):
            rows[i][j] = v
            rows[j][i] = v
        try:
            metric = MetricForm(rows)
        except SingularMatrixError:
            continue
        if prla_defect(alg, metric).is_zero():
            found.append(metric)
            if limit is not None and len(found) >= limit:
                break
    return found


def _bracket_slots(dim: int) -> list[tuple[int, int, int]]:
    """(i, j, k) slots for c^k_{ij}, pairs then output component, row-major."""
    return [(i, j, k) for i in range(dim) for j in range(i + 1, dim) for k in range(dim)]


def _jacobi_zero_fast(alg: LieAlgebra) -> bool:
    """Early-exit Jacobi check over strictly increasing triples only.

    The cyclic defect is alternating in its three slots, so increasing
    triples decide the full tensor.
    """
    n = alg.dim
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = [Fraction(0)] * n
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = alg.bracket_basis(a, b)
                    if any(inner):
                        for l, v in enumerate(alg.bracket(inner, basis[c])):
                            total[l] += v
                if any(total):
                    return False
    return True


def enumerate_lie_tables(dim: int) -> list[LieAlgebra]:
    """All valid Lie brackets with structure constants in {-1, 0, 1},
    ordered by support size then by the slot-value tuple."""
    slots = _bracket_slots(dim)
    candidates: list[tuple[int, tuple, LieAlgebra]] = []
    for values in itertools.product(_VALUES, repeat=len(slots)):
        support = sum(1 for v in values if v)
        table: dict[tuple[int, int], list[Fraction]] = {}
        for (i, j, k), v in zip(slots, values):
            if v:
                table.setdefault((i, j), [Fraction(0)] * dim)[k] = v
        alg = LieAlgebra(dim, table)
        if _jacobi_zero_fast(alg):
            key = tuple(_VALUES.index(v) for v in values)
            candidates.append((support, key, alg))
    candidates.sort(key=lambda c: (c[0], c[1]))
    return [alg for _, _, alg in candidates]


def _has_nonzero_pre_poisson(bi: LieBialgebra) -> bool:
    cx = InvariantComplex.from_bialgebra(bi, MetricForm.identity(bi.dim))
    for i in range(bi.dim):
        for j in range(bi.dim):
            value = pre_poisson_bracket(
                cx,
                FormElement.basis_covector(bi.dim, i + 1),
                FormElement.basis_covector(bi.dim, j + 1),
            )
            if not value.is_zero():
                return True
    return False


@dataclass(frozen=True)
class BialgebraSearchResult:
    """First bialgebra found plus how much the sweep saw on the way."""

    bialgebra: LieBialgebra
    dim: int
    pairs_checked: int
    both_nonzero_found: int


def find_nontrivial_bialgebra(
    dims: tuple[int, ...] = (2, 3), require_nonzero_pre_poisson: bool = True
) -> BialgebraSearchResult:
    """First valid bialgebra with both brackets nonzero, in sweep order.

    With ``require_nonzero_pre_poisson`` the sweep keeps going until the
    candidate also has a nonzero pre-Poisson bracket under the identity
    metric; the count of plain both-nonzero hits seen along the way is
    reported either way.
    """
    pairs_checked = 0
    both_nonzero = 0
    for dim in dims:
        algebras = [alg for alg in enumerate_lie_tables(dim) if not alg.is_abelian()]
        for g in algebras:
            for gstar in algebras:
                pairs_checked += 1
                if not cocycle_defect_zero(g, gstar):
                    continue
                both_nonzero += 1
                bi = LieBialgebra(g, gstar, validate=False)
                if require_nonzero_pre_poisson and not _has_nonzero_pre_poisson(bi):
                    continue
                return BialgebraSearchResult(bi, dim, pairs_checked, both_nonzero)
    raise ValidationError("no bialgebra with both brackets nonzero found in the sweep")


def cocycle_defect_zero(g: LieAlgebra, gstar: LieAlgebra) -> bool:
    """Cheap cocycle check for a candidate pair of valid brackets."""
    return cocycle_defect(LieBialgebra(g, gstar, validate=False)).is_zero()


__all__ = [
    "BialgebraSearchResult",
    "cocycle_defect_zero",
    "enumerate_lie_tables",
    "find_nontrivial_bialgebra",
    "pseudo_riemannian_metrics",
]
