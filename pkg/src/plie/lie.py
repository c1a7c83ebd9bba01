"""Lie algebras and Lie bialgebras over a fixed basis.

Structure constants are stored only for ordered pairs ``i < j`` (0-based);
antisymmetry is structural, the reversed bracket is evaluated as a negation.
A bialgebra couples a bracket on the base space with a bracket on the dual
space of the same dimension; its compatibility tensor (the derivative dual to
the dual bracket) must be a 1-cocycle for the adjoint action.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvalidInputError, ValidationError
from .rationals import rational
from .tensor import Tensor, Vector, scale_vector, zero_vector

_ZERO = Fraction(0)

PointVector = tuple[Fraction, ...]


def as_point(coords: Sequence, dim: int) -> PointVector:
    point = tuple(rational(c) for c in coords)
    if len(point) != dim:
        raise InvalidInputError(f"point has length {len(point)}, expected {dim}")
    return point


class LieAlgebra:
    """Antisymmetric bilinear bracket given by a structure-constant table.

    ``table`` maps 0-based pairs ``(i, j)`` with ``i < j`` to the coefficient
    vector of ``[e_i, e_j]``. Only nonzero rows are stored.
    """

    __slots__ = ("dim", "table")

    def __init__(self, dim: int, table: Mapping[tuple[int, int], Sequence] | None = None):
        dim = int(dim)
        if dim <= 0:
            raise InvalidInputError("dim must be positive")
        canon: dict[tuple[int, int], Vector] = {}
        for (i, j), coeffs in (table or {}).items():
            if not (0 <= i < j < dim):
                raise InvalidInputError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            vec = tuple(rational(c) for c in coeffs)
            if len(vec) != dim:
                raise InvalidInputError(f"coefficient vector for ({i}, {j}) has length {len(vec)}")
            if any(vec):
                canon[(i, j)] = vec
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "table", canon)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim)

    def is_abelian(self) -> bool:
        return not self.table

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for any index order; antisymmetry built in."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self.table.get((i, j), zero_vector(self.dim))
        row = self.table.get((j, i))
        return scale_vector(Fraction(-1), row) if row else zero_vector(self.dim)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis(i, j)[k]

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        """Bilinear, antisymmetric extension of the structure table."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise InvalidInputError(f"vectors must have length {n}")
        out = [_ZERO] * n
        for (i, j), row in self.table.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff:
                for k, c in enumerate(row):
                    if c:
                        out[k] += coeff * c
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.dim, frozenset((k, v) for k, v in self.table.items())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, nonzero_pairs={len(self.table)})"


def bracket_apply(alg: LieAlgebra, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return alg.bracket(u, v)


def jacobi_defect(alg: LieAlgebra) -> Tensor:
    """Rank-4 tensor of cyclic bracket sums; zero iff the table is a Lie algebra.

    Entry ``(i, j, k, l)`` is the ``e_l`` component of
    ``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]``.
    """
    n = alg.dim
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]

    def entry(idx: tuple[int, ...]) -> Fraction:
        i, j, k, l = idx
        total = _ZERO
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            total += alg.bracket(alg.bracket_basis(a, b), basis[c])[l]
        return total

    return Tensor.from_function((n, n, n, n), entry)


def coadjoint(alg: LieAlgebra, x: Sequence[Fraction], gamma: Sequence[Fraction]) -> Vector:
    """Coadjoint action on the dual: <ad*_x gamma, y> = -<gamma, [x, y]>."""
    n = alg.dim
    if len(x) != n or len(gamma) != n:
        raise InvalidInputError(f"vectors must have length {n}")
    out = [_ZERO] * n
    for (i, j), row in alg.table.items():
        pairing = _ZERO
        for k, c in enumerate(row):
            if c and gamma[k]:
                pairing += gamma[k] * c
        if pairing:
            # -<gamma, [x, e_j]> picks x_i, -<gamma, [x, e_i]> picks -x_j
            if x[i]:
                out[j] -= x[i] * pairing
            if x[j]:
                out[i] += x[j] * pairing
    return tuple(out)


def _wedge_matrix(pairs: Mapping[tuple[int, int], Fraction], n: int) -> list[list[Fraction]]:
    """Antisymmetric matrix from strictly-upper coefficients of a bivector."""
    m = [[_ZERO] * n for _ in range(n)]
    for (a, b), c in pairs.items():
        m[a][b] += c
        m[b][a] -= c
    return m


def _ad_bivector(alg: LieAlgebra, x_index: int, w: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Adjoint action of a basis vector on a bivector, acting as a derivation."""
    n = alg.dim
    out = [[_ZERO] * n for _ in range(n)]
    for a in range(n):
        row_a = alg.bracket_basis(x_index, a)
        for b in range(n):
            if w[a][b]:
                # [x, e_a] ^ e_b contribution
                for k, c in enumerate(row_a):
                    if c:
                        out[k][b] += c * w[a][b]
    for b in range(n):
        row_b = alg.bracket_basis(x_index, b)
        for a in range(n):
            if w[a][b]:
                # e_a ^ [x, e_b] contribution
                for k, c in enumerate(row_b):
                    if c:
                        out[a][k] += c * w[a][b]
    return out


class LieBialgebra:
    """A bracket on the base space paired with a bracket on its dual.

    ``xi`` is the rank-3 tensor with ``xi[k][a][b]`` the ``e_a ^ e_b``
    component (full antisymmetric matrix) of the image of ``e_k`` under the
    derivative dual to the dual-space bracket:
    ``<xi(X), alpha ^ beta> = <X, [alpha, beta]_dual>``.
    """

    __slots__ = ("g", "gstar", "xi")

    def __init__(self, g: LieAlgebra, gstar: LieAlgebra, validate: bool = True):
        if not isinstance(g, LieAlgebra) or not isinstance(gstar, LieAlgebra):
            raise InvalidInputError("LieBialgebra needs two LieAlgebra values")
        if g.dim != gstar.dim:
            raise InvalidInputError(f"dimension mismatch: {g.dim} vs {gstar.dim}")
        n = g.dim
        xi = Tensor.from_function(
            (n, n, n),
            lambda idx: gstar.structure_constant(idx[1], idx[2], idx[0]),
        )
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "gstar", gstar)
        object.__setattr__(self, "xi", xi)
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("LieBialgebra is immutable")

    @property
    def dim(self) -> int:
        return self.g.dim

    def validate(self) -> None:
        """Raise ValidationError unless both Jacobi defects and the cocycle defect vanish."""
        for label, alg in (("g", self.g), ("gstar", self.gstar)):
            defect = jacobi_defect(alg)
            hit = defect.first_nonzero()
            if hit is not None:
                idx, value = hit
                raise ValidationError(
                    f"Jacobi identity fails on {label} at basis triple "
                    f"({idx[0] + 1},{idx[1] + 1},{idx[2] + 1}), component {idx[3] + 1} = {value}",
                    detail={"defect": f"jacobi_{label}", "index": [i + 1 for i in idx], "value": str(value)},
                )
        defect = cocycle_defect(self)
        hit = defect.first_nonzero()
        if hit is not None:
            idx, value = hit
            raise ValidationError(
                "cocycle condition fails at basis pair "
                f"({idx[0] + 1},{idx[1] + 1}), bivector component ({idx[2] + 1},{idx[3] + 1}) = {value}",
                detail={"defect": "cocycle", "index": [i + 1 for i in idx], "value": str(value)},
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieBialgebra):
            return NotImplemented
        return self.g == other.g and self.gstar == other.gstar

    def __repr__(self) -> str:
        return f"LieBialgebra(dim={self.dim})"


def xi_matrix(bi: LieBialgebra, z: Sequence[Fraction]) -> list[list[Fraction]]:
    """Image of a vector under the cocycle map, as a full antisymmetric matrix."""
    n = bi.dim
    pairs: dict[tuple[int, int], Fraction] = {}
    for (a, b), row in bi.gstar.table.items():
        coeff = _ZERO
        for k, c in enumerate(row):
            if c and z[k]:
                coeff += z[k] * c
        if coeff:
            pairs[(a, b)] = coeff
    return _wedge_matrix(pairs, n)


def cocycle_defect(bi: LieBialgebra) -> Tensor:
    """Rank-4 tensor, zero iff the pair is a Lie bialgebra.

    Entry ``(x, y, a, b)`` is the ``e_a ^ e_b`` component (as a full
    antisymmetric matrix) of
    ``xi([e_x, e_y]) - ad_{e_x} xi(e_y) + ad_{e_y} xi(e_x)``,
    ``ad`` acting as a derivation on bivectors.
    """
    n = bi.dim
    basis = [tuple(Fraction(int(r == s)) for s in range(n)) for r in range(n)]
    entries: list[Fraction] = []
    for x in range(n):
        for y in range(n):
            m = xi_matrix(bi, bi.g.bracket_basis(x, y))
            ad_x = _ad_bivector(bi.g, x, xi_matrix(bi, basis[y]))
            ad_y = _ad_bivector(bi.g, y, xi_matrix(bi, basis[x]))
            for a in range(n):
                for b in range(n):
                    entries.append(m[a][b] - ad_x[a][b] + ad_y[a][b])
    return Tensor((n, n, n, n), entries)


def semidirect_double(g: LieAlgebra) -> LieAlgebra:
    """Semidirect bracket on two copies of the algebra.

    Basis order: indices ``0..n-1`` are ``(e_i, 0)``, indices ``n..2n-1`` are
    ``(0, e_i)``. The bracket is
    ``[(X,Y),(X',Y')] = ([X,X'], [X,Y'] + [Y,X'])``; the second copy is an
    abelian ideal.
    """
    n = g.dim
    table: dict[tuple[int, int], list[Fraction]] = {}
    for (i, j), row in g.table.items():
        # [(e_i,0),(e_j,0)] = ([e_i,e_j], 0)
        table[(i, j)] = list(row) + [_ZERO] * n
    for i in range(n):
        for j in range(n):
            # [(e_i,0),(0,e_j)] = (0, [e_i,e_j])
            row = g.bracket_basis(i, j)
            if any(row):
                table[(i, n + j)] = [_ZERO] * n + list(row)
    return LieAlgebra(2 * n, table)


def dual_semidirect_double(gstar: LieAlgebra) -> LieAlgebra:
    """Dual semidirect bracket on two copies of the dual algebra.

    Basis order mirrors :func:`semidirect_double`. The bracket is
    ``[(a,b),(a',b')] = ([a,b'] + [b,a'], [b,b'])``; the first copy is an
    abelian ideal.
    """
    n = gstar.dim
    table: dict[tuple[int, int], list[Fraction]] = {}
    for i in range(n):
        for j in range(n):
            # [(e_i,0),(0,e_j)] = ([e_i,e_j], 0)
            row = gstar.bracket_basis(i, j)
            if any(row):
                table[(i, n + j)] = list(row) + [_ZERO] * n
    for (i, j), row in gstar.table.items():
        # [(0,e_i),(0,e_j)] = (0, [e_i,e_j])
        table[(n + i, n + j)] = [_ZERO] * n + list(row)
    return LieAlgebra(2 * n, table)


def tangent_bialgebra(bi: LieBialgebra) -> LieBialgebra:
    """Bialgebra of the tangent double: semidirect base, dual-semidirect dual.

    The construction always yields a valid bialgebra; validation runs anyway
    so a violation would surface immediately.
    """
    return LieBialgebra(semidirect_double(bi.g), dual_semidirect_double(bi.gstar), validate=True)


def linearized_poisson(bi: LieBialgebra, p: Sequence[Fraction]) -> Tensor:
    """Antisymmetric matrix of the linear Poisson structure at a point.

    Entry ``(i, j)`` is ``<p, [e_i*, e_j*]_dual>``.
    """
    n = bi.dim
    point = as_point(p, n)
    rows = [[_ZERO] * n for _ in range(n)]
    for (i, j), row in bi.gstar.table.items():
        value = _ZERO
        for k, c in enumerate(row):
            if c and point[k]:
                value += point[k] * c
        if value:
            rows[i][j] += value
            rows[j][i] -= value
    return Tensor((n, n), [rows[i][j] for i in range(n) for j in range(n)])


def apply_bivector(pi: Tensor, alpha: Sequence[Fraction]) -> Vector:
    """Contract an antisymmetric matrix with a covector: result_j = sum_i a_i pi_ij."""
    n = pi.shape[0]
    if pi.rank != 2 or pi.shape != (n, n):
        raise InvalidInputError("bivector must be a square rank-2 tensor")
    if len(alpha) != n:
        raise InvalidInputError(f"covector must have length {n}")
    out = [_ZERO] * n
    for (i, j), value in pi.items():
        if alpha[i]:
            out[j] += alpha[i] * value
    return tuple(out)


__all__ = [
    "LieAlgebra",
    "LieBialgebra",
    "PointVector",
    "apply_bivector",
    "as_point",
    "bracket_apply",
    "coadjoint",
    "cocycle_defect",
    "dual_semidirect_double",
    "jacobi_defect",
    "linearized_poisson",
    "semidirect_double",
    "tangent_bialgebra",
    "xi_matrix",
]
