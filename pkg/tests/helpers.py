"""Shared generators and independent oracles for the test suite.

The generators draw from families that are Lie algebras (or bialgebras) for
every choice of coefficients, so fuzzing never needs rejection sampling. The
oracles recompute spec'd quantities through deliberately different code paths
(raw index loops, cofactor determinants, inversion-counting signs) so a PASS
against them is meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction

from plie.lie import LieAlgebra, LieBialgebra
from plie.metric import MetricForm

# -- random families ---------------------------------------------------------


def random_rational(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_lie(rng: random.Random, dim: int) -> LieAlgebra:
    """A random member of an always-valid family of brackets."""
    kinds = ["abelian", "single"]
    if dim == 2:
        kinds.append("plane")
    if dim >= 3:
        kinds += ["cyclic", "solvable", "nilpotent"]
    kind = rng.choice(kinds)
    if kind == "abelian":
        return LieAlgebra.abelian(dim)
    if kind == "single":
        i = rng.randrange(dim - 1)
        j = rng.randrange(i + 1, dim)
        k = rng.randrange(dim)
        row = [Fraction(0)] * dim
        row[k] = random_rational(rng) or Fraction(1)
        return LieAlgebra(dim, {(i, j): row})
    if kind == "plane":
        # any bracket on two generators satisfies Jacobi
        return LieAlgebra(2, {(0, 1): [random_rational(rng), random_rational(rng)]})
    if kind == "cyclic":
        # [e1,e2] = a e3, [e2,e3] = b e1, [e3,e1] = c e2 is a Lie algebra for
        # all a, b, c (each cyclic term lands on a repeated bracket)
        a, b, c = (random_rational(rng) for _ in range(3))
        return LieAlgebra(
            dim,
            {
                (0, 1): [Fraction(0), Fraction(0), a] + [Fraction(0)] * (dim - 3),
                (1, 2): [b] + [Fraction(0)] * (dim - 1),
                (0, 2): [Fraction(0), -c] + [Fraction(0)] * (dim - 2),
            },
        )
    if kind == "solvable":
        # [e1,e3] = a e1 + b e2, [e2,e3] = c e1 + d e2, [e1,e2] = 0
        a, b, c, d = (random_rational(rng) for _ in range(4))
        return LieAlgebra(
            dim,
            {
                (0, 2): [a, b] + [Fraction(0)] * (dim - 2),
                (1, 2): [c, d] + [Fraction(0)] * (dim - 2),
            },
        )
    # nilpotent: [e1,e2] = a e3
    row = [Fraction(0)] * dim
    row[2] = random_rational(rng) or Fraction(1)
    return LieAlgebra(dim, {(0, 1): row})


def random_bialgebra(rng: random.Random, dim: int) -> LieBialgebra:
    """One of the two always-valid families: abelian base with arbitrary dual,
    or arbitrary base with abelian dual."""
    if rng.random() < 0.5:
        return LieBialgebra(LieAlgebra.abelian(dim), random_lie(rng, dim))
    return LieBialgebra(random_lie(rng, dim), LieAlgebra.abelian(dim))


def random_metric(rng: random.Random, dim: int) -> MetricForm:
    """Random symmetric invertible matrix, built as L^T D L with unit
    triangular L and nonzero diagonal D."""
    lower = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        lower[i][i] = Fraction(1)
        for j in range(i):
            lower[i][j] = random_rational(rng, 2)
    diag = [random_rational(rng, 3) or Fraction(1) for _ in range(dim)]
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            rows[i][j] = sum(lower[k][i] * diag[k] * lower[k][j] for k in range(dim))
    return MetricForm(rows)


# -- independent oracles ------------------------------------------------------


def cofactor_determinant(rows) -> Fraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for c in range(n):
        if not rows[0][c]:
            continue
        minor = [[rows[r][cc] for cc in range(n) if cc != c] for r in range(1, n)]
        sign = -1 if c % 2 else 1
        total += sign * rows[0][c] * cofactor_determinant(minor)
    return total


def cramer_solve(matrix, rhs) -> list[Fraction]:
    """Solve by Cramer's rule with cofactor determinants (slow, independent)."""
    n = len(matrix)
    det = cofactor_determinant(matrix)
    assert det != 0
    out = []
    for col in range(n):
        replaced = [
            [rhs[r] if c == col else matrix[r][c] for c in range(n)] for r in range(n)
        ]
        out.append(cofactor_determinant(replaced) / det)
    return out


def oracle_levi_civita(bracket: LieAlgebra, metric: MetricForm):
    """Solve the defining system with raw loops and Cramer's rule."""
    n = bracket.dim
    sc = [[bracket.bracket_basis(i, j) for j in range(n)] for i in range(n)]
    a = metric.matrix

    def pair(u, v):
        return sum(u[p] * a[p][q] * v[q] for p in range(n) for q in range(n))

    basis = [[Fraction(int(r == s)) for s in range(n)] for r in range(n)]
    doubled = [[2 * a[i][j] for j in range(n)] for i in range(n)]
    gamma = {}
    for i in range(n):
        for j in range(n):
            rhs = [
                pair(sc[i][j], basis[l]) + pair(sc[l][i], basis[j]) + pair(sc[l][j], basis[i])
                for l in range(n)
            ]
            gamma[(i, j)] = cramer_solve(doubled, rhs)
    return gamma


def oracle_curvature(gamma, bracket: LieAlgebra):
    """Curvature from a coefficient table by raw summation."""
    n = bracket.dim
    out = {}
    for i in range(n):
        for j in range(n):
            br = bracket.bracket_basis(i, j)
            for k in range(n):
                vec = [Fraction(0)] * n
                for m in range(n):
                    for l in range(n):
                        vec[l] += gamma[(j, k)][m] * gamma[(i, m)][l]
                        vec[l] -= gamma[(i, k)][m] * gamma[(j, m)][l]
                for m in range(n):
                    if br[m]:
                        for l in range(n):
                            vec[l] -= br[m] * gamma[(m, k)][l]
                out[(i, j, k)] = vec
    return out


def oracle_cocycle_defect(g: LieAlgebra, gstar: LieAlgebra):
    """Componentwise expansion of the cocycle identity with raw index loops."""
    n = g.dim
    cg = [[[g.structure_constant(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]
    cs = [
        [[gstar.structure_constant(a, b, k) for k in range(n)] for b in range(n)]
        for a in range(n)
    ]

    def xi(vec):
        # xi(v)[a][b] = sum_k v_k c*^k_{ab}
        return [
            [sum(vec[k] * cs[a][b][k] for k in range(n)) for b in range(n)] for a in range(n)
        ]

    def ad(x, w):
        out = [[Fraction(0)] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                acc = Fraction(0)
                for p in range(n):
                    acc += cg[x][p][a] * w[p][b]  # [e_x, e_p] ^ e_b part
                    acc += cg[x][p][b] * w[a][p]  # e_a ^ [e_x, e_p] part
                out[a][b] = acc
        return out

    defect = {}
    for x in range(n):
        for y in range(n):
            bracket_vec = [cg[x][y][k] for k in range(n)]
            m = xi(bracket_vec)
            ex = [Fraction(int(s == x)) for s in range(n)]
            ey = [Fraction(int(s == y)) for s in range(n)]
            ax = ad(x, xi(ey))
            ay = ad(y, xi(ex))
            defect[(x, y)] = [
                [m[a][b] - ax[a][b] + ay[a][b] for b in range(n)] for a in range(n)
            ]
    return defect


# -- a tiny standalone exterior algebra for bracket oracles -------------------


def perm_sign(indices) -> int:
    """Permutation sign by inversion counting (independent of the package's
    insertion-sort sign tracking)."""
    inversions = sum(
        1
        for p in range(len(indices))
        for q in range(p + 1, len(indices))
        if indices[p] > indices[q]
    )
    return -1 if inversions % 2 else 1


def o_add(f, g):
    out = dict(f)
    for key, value in g.items():
        out[key] = out.get(key, Fraction(0)) + value
        if not out[key]:
            del out[key]
    return out


def o_scale(c, f):
    if not c:
        return {}
    return {k: c * v for k, v in f.items()}


def o_wedge(f, g):
    out = {}
    for kf, vf in f.items():
        for kg, vg in g.items():
            merged = kf + kg
            if len(set(merged)) != len(merged):
                continue
            key = tuple(sorted(merged))
            sign = perm_sign(merged)
            out[key] = out.get(key, Fraction(0)) + sign * vf * vg
            if not out[key]:
                del out[key]
    return out


def o_equal(f, g) -> bool:
    return o_add(f, o_scale(Fraction(-1), g)) == {}
