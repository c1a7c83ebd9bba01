"""Mechanical verification of the tangent-double structure theorems.

Each ``verify_*`` operation computes one statement's two sides through
disjoint code paths: the left side runs the generic machinery on the doubled
algebra (semidirect base, dual-semidirect dual, completely lifted metric),
the right side evaluates the direct pair formula on the base data. A PASS is
exact equality of rational tensors at every basis tuple; there is no
tolerance anywhere.

Basis identification on the double, fixed once: indices ``0..n-1`` are the
first slot (the pullback / vertical side for covectors), ``n..2n-1`` the
second slot (the complete lift side), mirrored on the vector side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import UnsupportedInputError
from .forms import FormElement
from .hawkins import (
    InvariantComplex,
    ce_differential,
    is_metaflat,
    koszul_bracket,
    metacurvature,
    pre_poisson_bracket,
)
from .lie import (
    LieAlgebra,
    LieBialgebra,
    dual_semidirect_double,
    semidirect_double,
    tangent_bialgebra,
)
from .metric import (
    InfinitesimalConnection,
    MetricForm,
    complete_lift_metric,
    curvature,
    levi_civita,
    nabla_curvature,
    prla_defect,
    prpl_abelian_base_check,
)
from .tensor import Tensor, Vector, add_vectors, zero_vector

_ZERO = Fraction(0)
_WITNESS_CAP = 8


# -- lifts of forms to the double -----------------------------------------


def vertical_lift(form: FormElement) -> FormElement:
    """Inclusion of a form into the first block of the doubled basis."""
    return FormElement(2 * form.dim, dict(form.components))


def complete_lift(form: FormElement) -> FormElement:
    """Complete lift at the identity fiber: shift one factor at a time into
    the second block; degree-0 parts vanish."""
    n = form.dim
    total = FormElement.zero(2 * n)
    for indices, coeff in form.components.items():
        for pos in range(len(indices)):
            shifted = indices[:pos] + (indices[pos] + n,) + indices[pos + 1 :]
            total = total + FormElement(2 * n, {shifted: coeff})
    return total


def pair_form(first: FormElement, second: FormElement) -> FormElement:
    """The double form identified with the pair (first, second)."""
    return vertical_lift(first) + complete_lift(second)


# -- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one statement check.

    ``lhs``/``rhs`` hold the nonzero entries of both evaluated sides as
    flattened index -> value maps; FAIL always carries at least one witness
    (capped at 8).
    """

    statement: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    lhs: dict = field(default_factory=dict)
    rhs: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def _key(indices: Sequence[int]) -> str:
    return ",".join(str(i + 1) for i in indices)


def _compare_vector_tables(
    statement: str, entries: list[tuple[tuple[int, ...], Vector, Vector]]
) -> VerificationReport:
    lhs_map: dict[str, str] = {}
    rhs_map: dict[str, str] = {}
    witnesses: list[Witness] = []
    for indices, lhs, rhs in entries:
        for comp, (lv, rv) in enumerate(zip(lhs, rhs)):
            full = indices + (comp,)
            if lv:
                lhs_map[_key(full)] = str(lv)
            if rv:
                rhs_map[_key(full)] = str(rv)
            if lv != rv and len(witnesses) < _WITNESS_CAP:
                witnesses.append(Witness(tuple(i + 1 for i in full), str(lv), str(rv)))
    return VerificationReport(statement, not witnesses, tuple(witnesses), lhs_map, rhs_map)


def _compare_form_tables(
    statement: str, entries: list[tuple[tuple[int, ...], FormElement, FormElement]]
) -> VerificationReport:
    lhs_map: dict[str, str] = {}
    rhs_map: dict[str, str] = {}
    witnesses: list[Witness] = []
    for indices, lhs, rhs in entries:
        keys = set(lhs.components) | set(rhs.components)
        for fkey in sorted(keys):
            lv = lhs.components.get(fkey, _ZERO)
            rv = rhs.components.get(fkey, _ZERO)
            label = _key(indices) + "|" + ",".join(map(str, fkey))
            if lv:
                lhs_map[label] = str(lv)
            if rv:
                rhs_map[label] = str(rv)
            if lv != rv and len(witnesses) < _WITNESS_CAP:
                witnesses.append(
                    Witness(tuple(i + 1 for i in indices) + fkey, str(lv), str(rv))
                )
    return VerificationReport(statement, not witnesses, tuple(witnesses), lhs_map, rhs_map)


# -- slot decomposition -----------------------------------------------------


def _slot(index: int, n: int) -> tuple[int | None, int | None]:
    """Double basis index -> (first-slot base index, second-slot base index)."""
    if index < n:
        return index, None
    return None, index - n


def _conn_term(conn: InfinitesimalConnection, i: int | None, j: int | None) -> Vector:
    if i is None or j is None:
        return zero_vector(conn.dim)
    return conn.basis(i, j)


def _assemble(first: Vector, second: Vector) -> Vector:
    return tuple(first) + tuple(second)


# -- statement checks --------------------------------------------------------


def verify_tangent_connection(bi: LieBialgebra, a: MetricForm) -> VerificationReport:
    """Connection of the double vs the pair formula
    (first, second) = (D_a b' + D_b a', D_b b')."""
    n = bi.dim
    base = levi_civita(bi.gstar, a)
    double = levi_civita(dual_semidirect_double(bi.gstar), complete_lift_metric(a))
    entries = []
    for big_i in range(2 * n):
        ai, bi_ = _slot(big_i, n)
        for big_j in range(2 * n):
            aj, bj = _slot(big_j, n)
            first = add_vectors(_conn_term(base, ai, bj), _conn_term(base, bi_, aj))
            second = _conn_term(base, bi_, bj)
            entries.append(((big_i, big_j), double.basis(big_i, big_j), _assemble(first, second)))
    return _compare_vector_tables("tangent_connection", entries)


def verify_tangent_curvature(bi: LieBialgebra, a: MetricForm) -> VerificationReport:
    """Curvature of the double vs the pair formula
    (R(a,b')b'' + R(b,a')b'' + R(b,b')a'', R(b,b')b'')."""
    n = bi.dim
    base_conn = levi_civita(bi.gstar, a)
    base_r = curvature(base_conn, bi.gstar)
    dd = dual_semidirect_double(bi.gstar)
    double_r = curvature(levi_civita(dd, complete_lift_metric(a)), dd)

    def r_term(x, y, z) -> Vector:
        if x is None or y is None or z is None:
            return zero_vector(n)
        return base_r.basis(x, y, z)

    entries = []
    for big_i in range(2 * n):
        ai, bi_ = _slot(big_i, n)
        for big_j in range(2 * n):
            aj, bj = _slot(big_j, n)
            for big_k in range(2 * n):
                ak, bk = _slot(big_k, n)
                first = add_vectors(
                    add_vectors(r_term(ai, bj, bk), r_term(bi_, aj, bk)),
                    r_term(bi_, bj, ak),
                )
                second = r_term(bi_, bj, bk)
                entries.append(
                    (
                        (big_i, big_j, big_k),
                        double_r.basis(big_i, big_j, big_k),
                        _assemble(first, second),
                    )
                )
    return _compare_vector_tables("tangent_curvature", entries)


def verify_tangent_nabla_r(bi: LieBialgebra, a: MetricForm) -> VerificationReport:
    """Covariant derivative of the double curvature vs the five-term pair
    formula built from the base covariant derivative."""
    n = bi.dim
    base_conn = levi_civita(bi.gstar, a)
    base_r = curvature(base_conn, bi.gstar)
    base_n = nabla_curvature(base_conn, base_r, bi.gstar)
    dd = dual_semidirect_double(bi.gstar)
    dconn = levi_civita(dd, complete_lift_metric(a))
    double_n = nabla_curvature(dconn, curvature(dconn, dd), dd)

    def n_term(w, x, y, z) -> Vector:
        if w is None or x is None or y is None or z is None:
            return zero_vector(n)
        return tuple(base_n[(w, x, y, z, l)] for l in range(n))

    entries = []
    for big_a in range(2 * n):
        aa, ba = _slot(big_a, n)
        for big_b in range(2 * n):
            ab, bb = _slot(big_b, n)
            for big_c in range(2 * n):
                ac, bc = _slot(big_c, n)
                for big_d in range(2 * n):
                    ad, bd = _slot(big_d, n)
                    first = add_vectors(
                        add_vectors(n_term(aa, bb, bc, bd), n_term(ba, ab, bc, bd)),
                        add_vectors(n_term(ba, bb, ac, bd), n_term(ba, bb, bc, ad)),
                    )
                    second = n_term(ba, bb, bc, bd)
                    lhs = tuple(
                        double_n[(big_a, big_b, big_c, big_d, l)] for l in range(2 * n)
                    )
                    entries.append(
                        ((big_a, big_b, big_c, big_d), lhs, _assemble(first, second))
                    )
    return _compare_vector_tables("tangent_curvature_derivative", entries)


def _zero_complex(base: LieAlgebra, dual: LieAlgebra) -> InvariantComplex:
    return InvariantComplex(base, dual, InfinitesimalConnection.zero(base.dim))


def verify_tangent_koszul(bi: LieBialgebra) -> VerificationReport:
    """Koszul bracket with an exact 1-form on the double vs the pair formula
    ([a, d b'] + [b, d a'], [b, d b'])."""
    n = bi.dim
    base_cx = _zero_complex(bi.g, bi.gstar)
    double_cx = _zero_complex(semidirect_double(bi.g), dual_semidirect_double(bi.gstar))

    def base_term(x: int | None, y: int | None) -> FormElement:
        if x is None or y is None:
            return FormElement.zero(n)
        return koszul_bracket(
            base_cx,
            FormElement.basis_covector(n, x + 1),
            base_cx.d_basis(y),
        )

    entries = []
    for big_i in range(2 * n):
        ai, bi_ = _slot(big_i, n)
        for big_j in range(2 * n):
            aj, bj = _slot(big_j, n)
            lhs = koszul_bracket(
                double_cx,
                FormElement.basis_covector(2 * n, big_i + 1),
                double_cx.d_basis(big_j),
            )
            first = base_term(ai, bj) + base_term(bi_, aj)
            second = base_term(bi_, bj)
            entries.append(((big_i, big_j), lhs, pair_form(first, second)))
    return _compare_form_tables("tangent_koszul", entries)


def _complexes(bi: LieBialgebra, a: MetricForm) -> tuple[InvariantComplex, InvariantComplex]:
    base_cx = InvariantComplex.from_bialgebra(bi, a)
    double_cx = InvariantComplex.from_bialgebra(tangent_bialgebra(bi), complete_lift_metric(a))
    return base_cx, double_cx


def verify_tangent_bracket(bi: LieBialgebra, a: MetricForm) -> VerificationReport:
    """Pre-Poisson bracket on the double vs the pair formula
    ({a,b'} + {b,a'}, {b,b'})."""
    n = bi.dim
    base_cx, double_cx = _complexes(bi, a)

    def base_term(x: int | None, y: int | None) -> FormElement:
        if x is None or y is None:
            return FormElement.zero(n)
        return pre_poisson_bracket(
            base_cx,
            FormElement.basis_covector(n, x + 1),
            FormElement.basis_covector(n, y + 1),
        )

    entries = []
    for big_i in range(2 * n):
        ai, bi_ = _slot(big_i, n)
        for big_j in range(2 * n):
            aj, bj = _slot(big_j, n)
            lhs = pre_poisson_bracket(
                double_cx,
                FormElement.basis_covector(2 * n, big_i + 1),
                FormElement.basis_covector(2 * n, big_j + 1),
            )
            first = base_term(ai, bj) + base_term(bi_, aj)
            second = base_term(bi_, bj)
            entries.append(((big_i, big_j), lhs, pair_form(first, second)))
    return _compare_form_tables("tangent_bracket", entries)


def verify_tangent_metacurvature(bi: LieBialgebra, a: MetricForm) -> VerificationReport:
    """Metacurvature of the double vs both the slot-pattern case table and the
    combined pair formula; the two right-hand constructions must also agree
    with each other."""
    n = bi.dim
    base_cx, double_cx = _complexes(bi, a)
    base_meta = metacurvature(base_cx)
    double_meta = metacurvature(double_cx)

    def mg(x: int | None, y: int | None, z: int | None) -> FormElement:
        if x is None or y is None or z is None:
            return FormElement.zero(n)
        return base_meta.entry(x, y, z)

    entries = []
    consistent = True
    for big_i in range(2 * n):
        ai, bi_ = _slot(big_i, n)
        for big_j in range(2 * n):
            aj, bj = _slot(big_j, n)
            for big_k in range(2 * n):
                ak, bk = _slot(big_k, n)
                combined = pair_form(
                    mg(ai, bj, bk) + mg(bi_, aj, bk) + mg(bi_, bj, ak),
                    mg(bi_, bj, bk),
                )
                case = _metacurvature_case(n, mg, (ai, bi_), (aj, bj), (ak, bk))
                if case != combined:
                    consistent = False
                entries.append(
                    ((big_i, big_j, big_k), double_meta.entry(big_i, big_j, big_k), combined)
                )
    report = _compare_form_tables("tangent_metacurvature", entries)
    if not consistent:
        return VerificationReport(
            report.statement,
            False,
            report.witnesses
            or (Witness((), "case-table", "combined-formula disagreement"),),
            report.lhs,
            report.rhs,
        )
    return report


def _metacurvature_case(n, mg, slot_i, slot_j, slot_k) -> FormElement:
    """The six slot-pattern cases (plus their images under symmetry of the
    last two arguments)."""
    ai, bi_ = slot_i
    aj, bj = slot_j
    ak, bk = slot_k
    pattern = (ai is None, aj is None, ak is None)  # True = second slot
    zero = FormElement.zero(2 * n)
    if pattern == (False, False, False) or pattern == (True, False, False):
        return zero
    if pattern in ((False, False, True), (False, True, False)):
        return zero
    if pattern == (False, True, True):
        return vertical_lift(mg(ai, bj, bk))
    if pattern == (True, True, True):
        return complete_lift(mg(bi_, bj, bk))
    if pattern == (True, True, False):
        return vertical_lift(mg(bi_, bj, ak))
    # pattern (True, False, True): symmetric image of (True, True, False)
    return vertical_lift(mg(bi_, bk, aj))


def verify_equivalences(bi: LieBialgebra, a: MetricForm) -> VerificationReport:
    """Flat / locally symmetric / metaflat verdicts must agree between the
    base and its double, each verdict computed independently."""
    n = bi.dim
    base_conn = levi_civita(bi.gstar, a)
    base_r = curvature(base_conn, bi.gstar)
    base_nabla = nabla_curvature(base_conn, base_r, bi.gstar)
    dd = dual_semidirect_double(bi.gstar)
    dconn = levi_civita(dd, complete_lift_metric(a))
    dr = curvature(dconn, dd)
    dnabla = nabla_curvature(dconn, dr, dd)
    base_cx, double_cx = _complexes(bi, a)
    pairs = {
        "flat": (base_r.is_zero(), dr.is_zero()),
        "locally_symmetric": (base_nabla.is_zero(), dnabla.is_zero()),
        "metaflat": (is_metaflat(base_cx), is_metaflat(double_cx)),
    }
    witnesses = tuple(
        Witness((), f"base {name}={b}", f"double {name}={d}")
        for name, (b, d) in pairs.items()
        if b != d
    )
    lhs = {name: str(b).lower() for name, (b, _) in pairs.items()}
    rhs = {name: str(d).lower() for name, (_, d) in pairs.items()}
    return VerificationReport("tangent_equivalences", not witnesses, witnesses, lhs, rhs)


def verify_prla_double(g: LieAlgebra, am: MetricForm) -> VerificationReport:
    """Vector-side double: the connection pair formula
    (A_X X', A_X Y' + A_Y X') must hold, and the pseudo-Riemannian verdicts of
    the algebra and its semidirect double must agree."""
    n = g.dim
    base = levi_civita(g, am)
    double_alg = semidirect_double(g)
    lifted = complete_lift_metric(am)
    double = levi_civita(double_alg, lifted)
    entries = []
    for big_i in range(2 * n):
        xi, yi = _slot(big_i, n)
        for big_j in range(2 * n):
            xj, yj = _slot(big_j, n)
            first = _conn_term(base, xi, xj)
            second = add_vectors(_conn_term(base, xi, yj), _conn_term(base, yi, xj))
            entries.append(((big_i, big_j), double.basis(big_i, big_j), _assemble(first, second)))
    report = _compare_vector_tables("semidirect_prla", entries)
    base_ok = prla_defect(g, am).is_zero()
    double_ok = prla_defect(double_alg, lifted).is_zero()
    if base_ok != double_ok:
        witnesses = report.witnesses + (
            Witness((), f"base pRLA={base_ok}", f"double pRLA={double_ok}"),
        )
        return VerificationReport(report.statement, False, witnesses, report.lhs, report.rhs)
    return report


def verify_prpl_theorem(bi: LieBialgebra, a: MetricForm) -> VerificationReport:
    """Abelian-base compatibility verdicts must agree between the bialgebra
    and its tangent double."""
    if not bi.g.is_abelian():
        raise UnsupportedInputError("compatibility theorem check needs an abelian base bracket")
    base = prpl_abelian_base_check(bi, a)
    double = prpl_abelian_base_check(tangent_bialgebra(bi), complete_lift_metric(a))
    passed = base.passed == double.passed
    witnesses = ()
    if not passed:
        witnesses = (
            Witness((), f"base prpl={base.passed}", f"double prpl={double.passed}"),
        )
    lhs = {"base": str(base.passed).lower()}
    rhs = {"double": str(double.passed).lower()}
    if base.witness:
        lhs["base_witness"] = str(base.witness)
    if double.witness:
        rhs["double_witness"] = str(double.witness)
    return VerificationReport("abelian_compatibility", passed, witnesses, lhs, rhs)


def verify_all(bi: LieBialgebra, a: MetricForm, am: MetricForm) -> list[VerificationReport]:
    """Run the full statement suite for one bialgebra.

    ``a`` is the dual-side form, ``am`` the base-side form (each other's
    inverse). The abelian compatibility theorem is included only when the
    base bracket is abelian.
    """
    reports = [
        verify_tangent_connection(bi, a),
        verify_tangent_curvature(bi, a),
        verify_tangent_nabla_r(bi, a),
        verify_tangent_koszul(bi),
        verify_tangent_bracket(bi, a),
        verify_tangent_metacurvature(bi, a),
        verify_equivalences(bi, a),
        verify_prla_double(bi.g, am),
    ]
    if bi.g.is_abelian():
        reports.append(verify_prpl_theorem(bi, a))
    return reports


__all__ = [
    "VerificationReport",
    "Witness",
    "complete_lift",
    "pair_form",
    "verify_all",
    "verify_equivalences",
    "verify_prla_double",
    "verify_prpl_theorem",
    "verify_tangent_bracket",
    "verify_tangent_connection",
    "verify_tangent_curvature",
    "verify_tangent_koszul",
    "verify_tangent_metacurvature",
    "verify_tangent_nabla_r",
    "vertical_lift",
]
