"""Metrics, the infinitesimal Levi-Civita contravariant connection, curvature,
local symmetry, and the pseudo-Riemannian compatibility conditions.

Everything here is basis-level: the connection lives on the span of the basis
covectors and is determined by the Koszul-type linear system

    2 a(A_alpha beta, gamma) = a([alpha,beta], gamma)
                             + a([gamma,alpha], beta)
                             + a([gamma,beta], alpha)

for the bracket and symmetric nondegenerate form handed in. The same solver
serves both the dual-side geometry (bracket on the dual, form on the dual) and
the vector-side geometry (bracket and form on the base space).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInputError, UnsupportedInputError
from .lie import LieAlgebra, LieBialgebra, apply_bivector, coadjoint, linearized_poisson
from .rationals import rational
from .tensor import (
    Tensor,
    Vector,
    add_vectors,
    determinant_rows,
    invert_rows,
    solve_rows,
    zero_vector,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class MetricForm:
    """Symmetric nondegenerate rational matrix with its exact inverse cached.

    Degeneracy is rejected at construction: every downstream formula needs
    the inverse.
    """

    __slots__ = ("dim", "matrix", "inverse")

    def __init__(self, rows: Sequence[Sequence]):
        matrix = tuple(tuple(rational(v) for v in row) for row in rows)
        n = len(matrix)
        if n == 0 or any(len(row) != n for row in matrix):
            raise InvalidInputError("metric must be a nonempty square matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if matrix[i][j] != matrix[j][i]:
                    raise InvalidInputError(
                        f"metric is not symmetric at ({i + 1},{j + 1}): "
                        f"{matrix[i][j]} vs {matrix[j][i]}"
                    )
        inverse = tuple(tuple(row) for row in invert_rows([list(r) for r in matrix]))
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "inverse", inverse)

    def __setattr__(self, name, value):
        raise AttributeError("MetricForm is immutable")

    @classmethod
    def identity(cls, n: int) -> "MetricForm":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    def pair(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        if len(u) != self.dim or len(v) != self.dim:
            raise InvalidInputError(f"vectors must have length {self.dim}")
        total = _ZERO
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.matrix[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    total += ui * row[j] * vj
        return total

    def determinant(self) -> Fraction:
        return determinant_rows(self.matrix)

    def to_tensor(self) -> Tensor:
        return Tensor((self.dim, self.dim), [v for row in self.matrix for v in row])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MetricForm):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"MetricForm(dim={self.dim})"


def contravariant_from_covariant(m: MetricForm) -> MetricForm:
    """Inverse matrix: the metric induced on the dual via the musical isomorphism."""
    return MetricForm(m.inverse)


def complete_lift_metric(a: MetricForm) -> MetricForm:
    """Block matrix [[0, a], [a, 0]]: the doubled-space metric whose mixed
    block is the original form and whose diagonal blocks vanish."""
    n = a.dim
    zero = [_ZERO] * n
    rows = []
    for i in range(n):
        rows.append(zero + list(a.matrix[i]))
    for i in range(n):
        rows.append(list(a.matrix[i]) + zero)
    return MetricForm(rows)


class InfinitesimalConnection:
    """Coefficient tensor of a bilinear connection on basis covectors.

    ``gamma[i][j][k]`` is the ``e_k`` coefficient of ``A_{e_i} e_j``.
    """

    __slots__ = ("dim", "gamma", "_rows")

    def __init__(self, gamma: Tensor):
        if gamma.rank != 3 or len(set(gamma.shape)) != 1:
            raise InvalidInputError("connection tensor must be rank 3 with equal extents")
        n = gamma.shape[0]
        rows = tuple(
            tuple(tuple(gamma[(i, j, k)] for k in range(n)) for j in range(n)) for i in range(n)
        )
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("InfinitesimalConnection is immutable")

    @classmethod
    def zero(cls, n: int) -> "InfinitesimalConnection":
        return cls(Tensor.zeros((n, n, n)))

    def basis(self, i: int, j: int) -> Vector:
        """A_{e_i} e_j as a coordinate vector."""
        return self._rows[i][j]

    def apply(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        """Bilinear extension A_u v."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise InvalidInputError(f"vectors must have length {n}")
        out = [_ZERO] * n
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                row = self._rows[i][j]
                coeff = ui * vj
                for k, c in enumerate(row):
                    if c:
                        out[k] += coeff * c
        return tuple(out)

    def is_zero(self) -> bool:
        return self.gamma.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, InfinitesimalConnection):
            return NotImplemented
        return self.gamma == other.gamma

    def __repr__(self) -> str:
        return f"InfinitesimalConnection(dim={self.dim})"


def levi_civita(bracket: LieAlgebra, a: MetricForm) -> InfinitesimalConnection:
    """The unique torsion-free, form-parallel connection for (bracket, a).

    Solves the defining linear system exactly for every basis pair.
    """
    n = bracket.dim
    if a.dim != n:
        raise InvalidInputError(f"metric dimension {a.dim} does not match bracket dimension {n}")
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]
    doubled = [[2 * v for v in row] for row in a.matrix]
    entries: list[Fraction] = []
    for i in range(n):
        for j in range(n):
            rhs = []
            for l in range(n):
                value = a.pair(bracket.bracket_basis(i, j), basis[l])
                value += a.pair(bracket.bracket_basis(l, i), basis[j])
                value += a.pair(bracket.bracket_basis(l, j), basis[i])
                rhs.append(value)
            entries.extend(solve_rows(doubled, rhs))
    return InfinitesimalConnection(Tensor((n, n, n), entries))


def torsion_defect(conn: InfinitesimalConnection, bracket: LieAlgebra) -> Tensor:
    """Entry (i, j, k): e_k component of A_{e_i}e_j - A_{e_j}e_i - [e_i, e_j]."""
    n = conn.dim
    if bracket.dim != n:
        raise InvalidInputError("dimension mismatch")
    entries: list[Fraction] = []
    for i in range(n):
        for j in range(n):
            lhs = conn.basis(i, j)
            rhs = conn.basis(j, i)
            br = bracket.bracket_basis(i, j)
            entries.extend(lhs[k] - rhs[k] - br[k] for k in range(n))
    return Tensor((n, n, n), entries)


def metric_parallel_defect(conn: InfinitesimalConnection, a: MetricForm) -> Tensor:
    """Entry (i, j, k): a(A_{e_i}e_j, e_k) + a(e_j, A_{e_i}e_k).

    In the invariant frame the form coefficients are constant, so parallelism
    is exactly the vanishing of this tensor.
    """
    n = conn.dim
    if a.dim != n:
        raise InvalidInputError("dimension mismatch")
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]
    entries: list[Fraction] = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                entries.append(
                    a.pair(conn.basis(i, j), basis[k]) + a.pair(basis[j], conn.basis(i, k))
                )
    return Tensor((n, n, n), entries)


class CurvatureTensor:
    """Rank-4 curvature coefficients; antisymmetric in the first two slots.

    ``tensor[i][j][k][l]`` is the ``e_l`` coefficient of ``R(e_i, e_j) e_k``.
    """

    __slots__ = ("dim", "tensor", "_rows")

    def __init__(self, tensor: Tensor):
        if tensor.rank != 4 or len(set(tensor.shape)) != 1:
            raise InvalidInputError("curvature tensor must be rank 4 with equal extents")
        n = tensor.shape[0]
        rows = tuple(
            tuple(
                tuple(tuple(tensor[(i, j, k, l)] for l in range(n)) for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        if rows[i][j][k][l] != -rows[j][i][k][l]:
                            raise InvalidInputError(
                                "curvature is not antisymmetric in its first two slots"
                            )
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "tensor", tensor)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("CurvatureTensor is immutable")

    def basis(self, i: int, j: int, k: int) -> Vector:
        return self._rows[i][j][k]

    def apply(self, u: Sequence[Fraction], v: Sequence[Fraction], w: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [_ZERO] * n
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                coeff_ij = ui * vj
                for k, wk in enumerate(w):
                    if not wk:
                        continue
                    row = self._rows[i][j][k]
                    coeff = coeff_ij * wk
                    for l, c in enumerate(row):
                        if c:
                            out[l] += coeff * c
        return tuple(out)

    def is_zero(self) -> bool:
        return self.tensor.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvatureTensor):
            return NotImplemented
        return self.tensor == other.tensor

    def __repr__(self) -> str:
        return f"CurvatureTensor(dim={self.dim}, zero={self.is_zero()})"


def curvature(conn: InfinitesimalConnection, bracket: LieAlgebra) -> CurvatureTensor:
    """R(e_i, e_j) e_k = A_i A_j e_k - A_j A_i e_k - A_{[e_i, e_j]} e_k."""
    n = conn.dim
    if bracket.dim != n:
        raise InvalidInputError("dimension mismatch")
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]
    entries: list[Fraction] = []
    for i in range(n):
        for j in range(n):
            br = bracket.bracket_basis(i, j)
            for k in range(n):
                value = conn.apply(basis[i], conn.basis(j, k))
                value = tuple(
                    p - q
                    for p, q in zip(value, conn.apply(basis[j], conn.basis(i, k)))
                )
                if any(br):
                    value = tuple(p - q for p, q in zip(value, conn.apply(br, basis[k])))
                entries.extend(value)
    return CurvatureTensor(Tensor((n, n, n, n), entries))


def nabla_curvature(
    conn: InfinitesimalConnection, r: CurvatureTensor, bracket: LieAlgebra
) -> Tensor:
    """Covariant derivative of the curvature; zero iff locally symmetric.

    Entry (a, b, c, d, l): e_l component of
    A_a(R(b,c)d) - R(A_a b, c)d - R(b, c)(A_a d) - R(b, A_a c)d.
    """
    n = conn.dim
    if r.dim != n or bracket.dim != n:
        raise InvalidInputError("dimension mismatch")
    basis = [tuple(Fraction(int(s == t) ) for t in range(n)) for s in range(n)]
    entries: list[Fraction] = []
    for a in range(n):
        ea = basis[a]
        for b in range(n):
            ab = conn.basis(a, b)
            for c in range(n):
                ac = conn.basis(a, c)
                for d in range(n):
                    term = conn.apply(ea, r.basis(b, c, d))
                    term = tuple(
                        p - q for p, q in zip(term, r.apply(ab, basis[c], basis[d]))
                    )
                    term = tuple(
                        p - q
                        for p, q in zip(term, r.apply(basis[b], basis[c], conn.basis(a, d)))
                    )
                    term = tuple(
                        p - q for p, q in zip(term, r.apply(basis[b], ac, basis[d]))
                    )
                    entries.extend(term)
    return Tensor((n, n, n, n, n), entries)


def prla_defect(bracket: LieAlgebra, a: MetricForm) -> Tensor:
    """Pseudo-Riemannian Lie algebra defect for (bracket, a).

    Entry (i, j, k, l): e_l component of [A_{e_i}e_j, e_k] + [e_i, A_{e_k}e_j]
    with A the Levi-Civita connection of the pair. Zero iff the metric Lie
    algebra is pseudo-Riemannian.
    """
    conn = levi_civita(bracket, a)
    n = bracket.dim
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]
    entries: list[Fraction] = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                term = bracket.bracket(conn.basis(i, j), basis[k])
                term = add_vectors(term, bracket.bracket(basis[i], conn.basis(k, j)))
                entries.extend(term)
    return Tensor((n, n, n, n), entries)


def prpl_pointwise_defect(
    bi: LieBialgebra, a: MetricForm, pi: Tensor, adstar: Tensor
) -> Tensor:
    """Compatibility defect of the Poisson structure and the metric at one point.

    ``pi`` is the antisymmetric matrix of the left-translated Poisson bivector
    at the point; ``adstar`` models the coadjoint group action there. Entry
    (i, j, k, l) is the e_l component of

        [T(A_i e_k + ad*_{pi(e_i)} e_k), T(e_j)] + [T(e_i), T(A_j e_k + ad*_{pi(e_j)} e_k)]

    with T = adstar, A the Levi-Civita connection of (dual bracket, a), ad*
    the coadjoint action of the base bracket, and [ , ] the dual bracket.
    """
    n = bi.dim
    if a.dim != n:
        raise InvalidInputError("metric dimension mismatch")
    if pi.rank != 2 or pi.shape != (n, n):
        raise InvalidInputError("pi must be an n x n tensor")
    for i in range(n):
        for j in range(n):
            if pi[(i, j)] != -pi[(j, i)]:
                raise InvalidInputError(f"pi is not antisymmetric at ({i + 1},{j + 1})")
    if adstar.rank != 2 or adstar.shape != (n, n):
        raise InvalidInputError("adstar must be an n x n tensor")
    conn = levi_civita(bi.gstar, a)
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]
    ad_rows = adstar.to_rows()

    def act(w: Sequence[Fraction]) -> Vector:
        out = [_ZERO] * n
        for r in range(n):
            row = ad_rows[r]
            for c, wc in enumerate(w):
                if wc and row[c]:
                    out[r] += row[c] * wc
        return tuple(out)

    hamiltonian = [apply_bivector(pi, basis[i]) for i in range(n)]
    entries: list[Fraction] = []
    for i in range(n):
        ti = act(basis[i])
        for j in range(n):
            tj = act(basis[j])
            for k in range(n):
                left = add_vectors(conn.basis(i, k), coadjoint(bi.g, hamiltonian[i], basis[k]))
                right = add_vectors(conn.basis(j, k), coadjoint(bi.g, hamiltonian[j], basis[k]))
                term = bi.gstar.bracket(act(left), tj)
                term = add_vectors(term, bi.gstar.bracket(ti, act(right)))
                entries.extend(term)
    return Tensor((n, n, n, n), entries)


@dataclass(frozen=True)
class CompatibilityVerdict:
    """Outcome of the abelian-base compatibility sweep."""

    passed: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.passed


def prpl_abelian_base_check(bi: LieBialgebra, a: MetricForm) -> CompatibilityVerdict:
    """Exhaustive compatibility check when the base bracket is abelian.

    With an abelian base the coadjoint group action is trivial and the
    left-translated bivector at any point is the linear structure, which is
    linear in the point, so sweeping basis points is complete. PASS iff the
    pointwise defect vanishes at every basis point.
    """
    if not bi.g.is_abelian():
        raise UnsupportedInputError(
            "base bracket is not abelian; evaluate prpl_pointwise_defect with "
            "caller-supplied (pi, adstar) instead"
        )
    n = bi.dim
    identity = Tensor.from_function((n, n), lambda idx: Fraction(int(idx[0] == idx[1])))
    for m in range(n):
        point = tuple(Fraction(int(s == m)) for s in range(n))
        defect = prpl_pointwise_defect(bi, a, linearized_poisson(bi, point), identity)
        hit = defect.first_nonzero()
        if hit is not None:
            idx, value = hit
            return CompatibilityVerdict(
                passed=False,
                witness={
                    "point": m + 1,
                    "triple": [idx[0] + 1, idx[1] + 1, idx[2] + 1],
                    "component": idx[3] + 1,
                    "value": str(value),
                },
            )
    return CompatibilityVerdict(passed=True)


__all__ = [
    "CompatibilityVerdict",
    "CurvatureTensor",
    "InfinitesimalConnection",
    "MetricForm",
    "complete_lift_metric",
    "contravariant_from_covariant",
    "curvature",
    "levi_civita",
    "metric_parallel_defect",
    "nabla_curvature",
    "prla_defect",
    "prpl_abelian_base_check",
    "prpl_pointwise_defect",
    "torsion_defect",
]
