"""Invariant-form calculus: differential, generalized Koszul bracket,
connection extension, pre-Poisson bracket, metacurvature, graded Jacobi.

Everything acts on the exterior algebra over the dual basis. The differential
is driven by the base bracket (on 1-forms ``d a (X, Y) = -a([X, Y])``,
extended as an antiderivation); the Koszul bracket of invariant 1-forms is
the dual-space bracket, extended to higher degree by the Leibniz rule; the
connection extends to forms as a derivation. Function-slot arguments are
represented by their constant differentials, i.e. basis covectors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import InvalidInputError, UnsupportedInputError
from .forms import FormElement, wedge
from .lie import LieAlgebra, LieBialgebra
from .metric import InfinitesimalConnection, MetricForm, levi_civita

_ZERO = Fraction(0)


class InvariantComplex:
    """The differential graded algebra of invariant forms for one bialgebra.

    ``base`` drives the differential, ``dual`` drives the Koszul bracket,
    ``conn`` is the connection on 1-forms (normally the Levi-Civita connection
    of the dual bracket and a metric). Caches are internal; the value is
    immutable in behavior.
    """

    def __init__(self, base: LieAlgebra, dual: LieAlgebra, conn: InfinitesimalConnection):
        if not (base.dim == dual.dim == conn.dim):
            raise InvalidInputError(
                f"dimension mismatch: base {base.dim}, dual {dual.dim}, connection {conn.dim}"
            )
        self.base = base
        self.dual = dual
        self.conn = conn
        self.dim = base.dim
        self._d_basis: dict[int, FormElement] = {}
        self._pre_poisson: dict[tuple[int, int], FormElement] = {}
        self._graded: dict[tuple[tuple[int, ...], tuple[int, ...]], FormElement] = {}
        self._meta: MetaTensor | None = None

    @classmethod
    def from_bialgebra(cls, bi: LieBialgebra, a: MetricForm) -> "InvariantComplex":
        return cls(bi.g, bi.gstar, levi_civita(bi.gstar, a))

    # -- basis-level building blocks -------------------------------------

    def d_basis(self, i: int) -> FormElement:
        """Differential of the basis covector with 0-based index i."""
        cached = self._d_basis.get(i)
        if cached is None:
            comps: dict[tuple[int, ...], Fraction] = {}
            for (a, b), row in self.base.table.items():
                if row[i]:
                    comps[(a + 1, b + 1)] = -row[i]
            cached = FormElement(self.dim, comps)
            self._d_basis[i] = cached
        return cached

    def _covector_form(self, coords: Sequence[Fraction]) -> FormElement:
        return FormElement(self.dim, {(k + 1,): c for k, c in enumerate(coords) if c})

    def koszul_basis(self, i: int, j: int) -> FormElement:
        return self._covector_form(self.dual.bracket_basis(i, j))

    def conn_basis(self, i: int, j: int) -> FormElement:
        return self._covector_form(self.conn.basis(i, j))


def _derivation_on_monomial(
    cx: InvariantComplex, action: Callable[[int], FormElement], indices: tuple[int, ...]
) -> FormElement:
    """Apply a degree-preserving derivation given on basis 1-forms to a monomial."""
    total = FormElement.zero(cx.dim)
    for pos, idx1 in enumerate(indices):
        acted = action(idx1 - 1)
        if acted.is_zero():
            continue
        prefix = FormElement.monomial(cx.dim, indices[:pos])
        suffix = FormElement.monomial(cx.dim, indices[pos + 1 :])
        total = total + wedge(prefix, wedge(acted, suffix))
    return total


def ce_differential(cx: InvariantComplex, f: FormElement) -> FormElement:
    """Degree +1 antiderivation; on 1-forms d a (X, Y) = -a([X, Y]_base).

    Satisfies d(d(f)) = 0 because the base bracket satisfies Jacobi.
    """
    if f.dim != cx.dim:
        raise InvalidInputError(f"form dimension {f.dim} does not match complex {cx.dim}")
    total = FormElement.zero(cx.dim)
    for indices, coeff in f.components.items():
        for pos, idx1 in enumerate(indices):
            d_e = cx.d_basis(idx1 - 1)
            if d_e.is_zero():
                continue
            sign = -1 if pos % 2 else 1
            rest = FormElement.monomial(cx.dim, indices[:pos] + indices[pos + 1 :], sign * coeff)
            # d(e) has even degree, so it slides to the front freely
            total = total + wedge(d_e, rest)
    return total


def _degree_one_coords(cx: InvariantComplex, alpha: FormElement, op_name: str) -> list[Fraction]:
    if alpha.dim != cx.dim:
        raise InvalidInputError(f"form dimension {alpha.dim} does not match complex {cx.dim}")
    if not alpha.is_homogeneous(1):
        raise UnsupportedInputError(f"{op_name} requires a degree-1 first argument")
    return [alpha.components.get((k + 1,), _ZERO) for k in range(cx.dim)]


def koszul_bracket(cx: InvariantComplex, alpha: FormElement, s: FormElement) -> FormElement:
    """Koszul bracket of a 1-form with any form.

    On 1-forms it is the dual-space bracket; it extends to wedges by the
    Leibniz rule, which for a degree-1 first slot is a plain derivation.
    Degree-0 elements are annihilated (they are invariant constants).
    """
    coords = _degree_one_coords(cx, alpha, "koszul_bracket")
    if s.dim != cx.dim:
        raise InvalidInputError("dimension mismatch")
    total = FormElement.zero(cx.dim)
    for i, ci in enumerate(coords):
        if not ci:
            continue
        for indices, coeff in s.components.items():
            part = _derivation_on_monomial(cx, lambda j: cx.koszul_basis(i, j), indices)
            if not part.is_zero():
                total = total + part * (ci * coeff)
    return total


def connection_extend(cx: InvariantComplex, alpha: FormElement, s: FormElement) -> FormElement:
    """Extension of the connection to forms as a derivation; on 1-forms it is
    the connection itself, on degree 0 it vanishes."""
    coords = _degree_one_coords(cx, alpha, "connection_extend")
    if s.dim != cx.dim:
        raise InvalidInputError("dimension mismatch")
    total = FormElement.zero(cx.dim)
    for i, ci in enumerate(coords):
        if not ci:
            continue
        for indices, coeff in s.components.items():
            part = _derivation_on_monomial(cx, lambda j: cx.conn_basis(i, j), indices)
            if not part.is_zero():
                total = total + part * (ci * coeff)
    return total


def _pre_poisson_basis(cx: InvariantComplex, i: int, j: int) -> FormElement:
    cached = cx._pre_poisson.get((i, j))
    if cached is not None:
        return cached
    ei = FormElement.basis_covector(cx.dim, i + 1)
    ej = FormElement.basis_covector(cx.dim, j + 1)
    d_ej = cx.d_basis(j)
    d_ei = cx.d_basis(i)
    value = (
        -connection_extend(cx, ei, d_ej)
        - connection_extend(cx, ej, d_ei)
        + ce_differential(cx, cx.conn_basis(j, i))
        + koszul_bracket(cx, ei, d_ej)
    )
    cx._pre_poisson[(i, j)] = value
    return value


def pre_poisson_bracket(cx: InvariantComplex, alpha: FormElement, beta: FormElement) -> FormElement:
    """{alpha, beta} = -D_alpha d beta - D_beta d alpha + d D_beta alpha + [alpha, d beta].

    Both arguments must be 1-forms; the result has degree 2.
    """
    ca = _degree_one_coords(cx, alpha, "pre_poisson_bracket")
    cb = _degree_one_coords(cx, beta, "pre_poisson_bracket")
    total = FormElement.zero(cx.dim)
    for i, ai in enumerate(ca):
        if not ai:
            continue
        for j, bj in enumerate(cb):
            if not bj:
                continue
            total = total + _pre_poisson_basis(cx, i, j) * (ai * bj)
    return total


def _graded_monomial(cx: InvariantComplex, left: tuple[int, ...], right: tuple[int, ...]) -> FormElement:
    cached = cx._graded.get((left, right))
    if cached is not None:
        return cached
    if not left or not right:
        value = FormElement.zero(cx.dim)
    elif len(left) == 1 and len(right) == 1:
        value = _pre_poisson_basis(cx, left[0] - 1, right[0] - 1)
    elif len(right) > 1:
        # product rule on the second slot: {s, e ^ rest} = {s, e} ^ rest + (-1)^{|s|} e ^ {s, rest}
        head, rest = right[0], right[1:]
        first = wedge(_graded_monomial(cx, left, (head,)), FormElement.monomial(cx.dim, rest))
        second = wedge(
            FormElement.basis_covector(cx.dim, head), _graded_monomial(cx, left, rest)
        )
        if len(left) % 2:
            value = first - second
        else:
            value = first + second
    else:
        # graded antisymmetry: {s, u} = -(-1)^{|s||u|} {u, s}
        flipped = _graded_monomial(cx, right, left)
        sign = -1 if (len(left) * len(right)) % 2 == 0 else 1
        value = flipped * sign
    cx._graded[(left, right)] = value
    return value


def graded_bracket(cx: InvariantComplex, s: FormElement, u: FormElement) -> FormElement:
    """The bracket on all of the exterior algebra generated from the
    pre-Poisson bracket on 1-forms and zero on constants, via the product
    rule and graded antisymmetry."""
    if s.dim != cx.dim or u.dim != cx.dim:
        raise InvalidInputError("dimension mismatch")
    total = FormElement.zero(cx.dim)
    for ks, cs in s.components.items():
        for ku, cu in u.components.items():
            part = _graded_monomial(cx, ks, ku)
            if not part.is_zero():
                total = total + part * (cs * cu)
    return total


def graded_jacobi_defect(
    cx: InvariantComplex, s: FormElement, u: FormElement, v: FormElement
) -> FormElement:
    """{s,{u,v}} - {{s,u},v} - (-1)^{deg s deg u} {u,{s,v}}.

    Mixed-degree inputs are split into homogeneous parts so the sign is
    well defined term by term.
    """
    total = FormElement.zero(cx.dim)
    for ds in sorted(s.degrees()):
        ps = s.homogeneous_part(ds)
        for du in sorted(u.degrees()):
            pu = u.homogeneous_part(du)
            term = graded_bracket(cx, ps, graded_bracket(cx, pu, v))
            term = term - graded_bracket(cx, graded_bracket(cx, ps, pu), v)
            inner = graded_bracket(cx, pu, graded_bracket(cx, ps, v))
            if (ds * du) % 2:
                term = term + inner
            else:
                term = term - inner
            total = total + term
    return total


class MetaTensor:
    """Metacurvature values over all basis triples.

    ``entry(i, j, k)`` (0-based) is the degree-2 form
    ``D_{e_i} {e_j, e_k} - {D_{e_i} e_j, e_k} - {D_{e_i} e_k, e_j}``.
    Entries are symmetric in the last two slots; the constructor enforces it.
    """

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int, int], FormElement]):
        entries = dict(entries)
        for (i, j, k), value in entries.items():
            mirror = entries.get((i, k, j))
            if mirror is None or mirror != value:
                raise InvalidInputError(
                    f"metacurvature entries are not symmetric in the last two slots at "
                    f"({i + 1};{j + 1},{k + 1})"
                )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("MetaTensor is immutable")

    def entry(self, i: int, j: int, k: int) -> FormElement:
        return self.entries.get((i, j, k), FormElement.zero(self.dim))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.entries.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MetaTensor):
            return NotImplemented
        if self.dim != other.dim:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.entry(*k) == other.entry(*k) for k in keys)

    def __repr__(self) -> str:
        return f"MetaTensor(dim={self.dim}, zero={self.is_zero()})"


def metacurvature(cx: InvariantComplex) -> MetaTensor:
    """Obstruction tensor to the graded Jacobi identity of the bracket.

    The function slot is represented by a basis covector (the constant
    differential of a coordinate), exactly as in the basis computation of the
    bracket with ``{f, s} = D_{df} s``.
    """
    if cx._meta is not None:
        return cx._meta
    n = cx.dim
    entries: dict[tuple[int, int, int], FormElement] = {}
    for i in range(n):
        ei = FormElement.basis_covector(n, i + 1)
        d_rows = [cx.conn.basis(i, j) for j in range(n)]
        for j in range(n):
            for k in range(n):
                value = connection_extend(cx, ei, _pre_poisson_basis(cx, j, k))
                for m, c in enumerate(d_rows[j]):
                    if c:
                        value = value - _pre_poisson_basis(cx, m, k) * c
                for m, c in enumerate(d_rows[k]):
                    if c:
                        value = value - _pre_poisson_basis(cx, m, j) * c
                entries[(i, j, k)] = value
    meta = MetaTensor(n, entries)
    cx._meta = meta
    return meta


def is_metaflat(cx: InvariantComplex) -> bool:
    """True iff the metacurvature vanishes identically."""
    return metacurvature(cx).is_zero()


__all__ = [
    "InvariantComplex",
    "MetaTensor",
    "ce_differential",
    "connection_extend",
    "graded_bracket",
    "graded_jacobi_defect",
    "is_metaflat",
    "koszul_bracket",
    "metacurvature",
    "pre_poisson_bracket",
]
