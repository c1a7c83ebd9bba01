"""Exhaustive property suites over the catalog plus the two always-valid
random families. Every suite tallies its exact-equality assertions and
requires at least one hundred of them."""

import itertools
import math
import random
from fractions import Fraction

from helpers import random_bialgebra, random_lie, random_metric
from plie.forms import FormElement, wedge
from plie.hawkins import (
    InvariantComplex,
    ce_differential,
    graded_bracket,
    graded_jacobi_defect,
    is_metaflat,
    metacurvature,
    pre_poisson_bracket,
)
from plie.lie import LieAlgebra, LieBialgebra, cocycle_defect, jacobi_defect
from plie.metric import (
    MetricForm,
    curvature,
    levi_civita,
    metric_parallel_defect,
    torsion_defect,
)

F = Fraction


def catalog_pairs(catalog_models):
    for name in sorted(catalog_models):
        _, bi, a, _ = catalog_models[name]
        yield name, bi, a


def family_pairs(seed, count, dim=3):
    rng = random.Random(seed)
    for _ in range(count):
        bi = random_bialgebra(rng, dim)
        yield bi, random_metric(rng, dim)


def monomials(dim, max_degree):
    for k in range(max_degree + 1):
        yield from itertools.combinations(range(1, dim + 1), k)


def test_jacobi_and_cocycle_zero_defect_suite(catalog_models):
    count = 0
    entries = [(bi, a) for _, bi, a in catalog_pairs(catalog_models)]
    entries += list(family_pairs(seed=101, count=12))
    for bi, _ in entries:
        n = bi.dim
        jg = jacobi_defect(bi.g)
        js = jacobi_defect(bi.gstar)
        cd = cocycle_defect(bi)
        for idx in itertools.product(range(n), repeat=4):
            assert jg[idx] == 0
            assert js[idx] == 0
            assert cd[idx] == 0
            count += 3
        # stored scalars are reduced: positive denominators, lowest terms
        for row in bi.g.table.values():
            for v in row:
                assert v.denominator > 0 and math.gcd(abs(v.numerator), v.denominator) in (0, 1)
                count += 1
    assert count >= 100
    print(f"jacobi/cocycle suite: {count} exact assertions")


def test_connection_defect_suite(catalog_models):
    count = 0
    entries = [(bi, a) for _, bi, a in catalog_pairs(catalog_models)]
    entries += list(family_pairs(seed=102, count=10))
    for bi, a in entries:
        conn = levi_civita(bi.gstar, a)
        n = bi.dim
        td = torsion_defect(conn, bi.gstar)
        pd = metric_parallel_defect(conn, a)
        for idx in itertools.product(range(n), repeat=3):
            assert td[idx] == 0
            assert pd[idx] == 0
            count += 2
    assert count >= 100
    print(f"connection defect suite: {count} exact assertions")


def test_curvature_antisymmetry_suite(catalog_models):
    count = 0
    entries = [(bi, a) for _, bi, a in catalog_pairs(catalog_models)]
    entries += list(family_pairs(seed=103, count=8))
    for bi, a in entries:
        conn = levi_civita(bi.gstar, a)
        r = curvature(conn, bi.gstar)
        n = bi.dim
        for i, j, k, l in itertools.product(range(n), repeat=4):
            assert r.tensor[(i, j, k, l)] == -r.tensor[(j, i, k, l)]
            count += 1
    assert count >= 100
    print(f"curvature antisymmetry suite: {count} exact assertions")


def test_metacurvature_symmetry_suite(catalog_models):
    count = 0
    entries = [(bi, a) for _, bi, a in catalog_pairs(catalog_models)]
    entries += list(family_pairs(seed=104, count=6))
    for bi, a in entries:
        cx = InvariantComplex.from_bialgebra(bi, a)
        meta = metacurvature(cx)
        n = bi.dim
        for i, j, k in itertools.product(range(n), repeat=3):
            assert meta.entry(i, j, k) == meta.entry(i, k, j)
            count += 1
    assert count >= 100
    print(f"metacurvature symmetry suite: {count} exact assertions")


def test_differential_squares_to_zero_suite(catalog_models):
    count = 0
    entries = [(bi, a) for _, bi, a in catalog_pairs(catalog_models)]
    entries += list(family_pairs(seed=105, count=10))
    for bi, a in entries:
        cx = InvariantComplex.from_bialgebra(bi, a)
        for mono in monomials(bi.dim, bi.dim):
            f = FormElement.monomial(bi.dim, mono)
            assert ce_differential(cx, ce_differential(cx, f)).is_zero()
            count += 1
    assert count >= 100
    print(f"d-squared suite: {count} exact assertions")


def _flat_complexes(catalog_models):
    out = []
    for name, bi, a in catalog_pairs(catalog_models):
        conn = levi_civita(bi.gstar, a)
        if curvature(conn, bi.gstar).is_zero():
            out.append((name, InvariantComplex(bi.g, bi.gstar, conn)))
    rng = random.Random(106)
    while len(out) < 8:
        bi = random_bialgebra(rng, 3)
        a = random_metric(rng, 3)
        conn = levi_civita(bi.gstar, a)
        if curvature(conn, bi.gstar).is_zero():
            out.append(("random", InvariantComplex(bi.g, bi.gstar, conn)))
    return out


def test_hawkins_axiom_suite_on_flat_entries(catalog_models):
    count = 0
    for name, cx in _flat_complexes(catalog_models):
        n = cx.dim
        monos = list(monomials(n, 2))
        # axiom 1: graded antisymmetry
        for ka in monos:
            for kb in monos:
                fa = FormElement.monomial(n, ka)
                fb = FormElement.monomial(n, kb)
                sign = -1 if (len(ka) * len(kb)) % 2 == 0 else 1
                assert graded_bracket(cx, fa, fb) == graded_bracket(cx, fb, fa) * sign
                count += 1
        # axiom 2: product rule
        for ka in monos[: 6]:
            for kb in monos[: 6]:
                for kc in monos[: 6]:
                    fa = FormElement.monomial(n, ka)
                    fb = FormElement.monomial(n, kb)
                    fc = FormElement.monomial(n, kc)
                    sign = -1 if (len(ka) * len(kb)) % 2 else 1
                    lhs = graded_bracket(cx, fa, wedge(fb, fc))
                    rhs = wedge(graded_bracket(cx, fa, fb), fc) + wedge(
                        fb, graded_bracket(cx, fa, fc)
                    ) * sign
                    assert lhs == rhs
                    count += 1
        # axiom 3: d is a derivation of the bracket
        for ka in monos:
            for kb in monos:
                fa = FormElement.monomial(n, ka)
                fb = FormElement.monomial(n, kb)
                sign = -1 if len(ka) % 2 else 1
                lhs = ce_differential(cx, graded_bracket(cx, fa, fb))
                rhs = graded_bracket(cx, ce_differential(cx, fa), fb) + graded_bracket(
                    cx, fa, ce_differential(cx, fb)
                ) * sign
                assert lhs == rhs
                count += 1
    assert count >= 100
    print(f"hawkins axiom suite: {count} exact assertions")


def test_graded_jacobi_suite_on_metaflat_entries(catalog_models):
    count = 0
    complexes = []
    for name, bi, a in catalog_pairs(catalog_models):
        cx = InvariantComplex.from_bialgebra(bi, a)
        if is_metaflat(cx):
            complexes.append(cx)
    rng = random.Random(107)
    while len(complexes) < 7:
        bi = random_bialgebra(rng, 3)
        cx = InvariantComplex.from_bialgebra(bi, random_metric(rng, 3))
        if is_metaflat(cx):
            complexes.append(cx)
    for cx in complexes:
        n = cx.dim
        monos = list(monomials(n, 2))
        for ks in monos:
            for ku in monos:
                for kv in monos:
                    if len(ks) + len(ku) + len(kv) > 4:
                        continue
                    defect = graded_jacobi_defect(
                        cx,
                        FormElement.monomial(n, ks),
                        FormElement.monomial(n, ku),
                        FormElement.monomial(n, kv),
                    )
                    assert defect.is_zero()
                    count += 1
    assert count >= 100
    print(f"graded jacobi suite: {count} exact assertions")


def test_abelian_family_closure():
    # abelian base + arbitrary valid dual is always a bialgebra, and so is
    # the mirror family; the generators run through the constructor's gate
    rng = random.Random(108)
    count = 0
    for _ in range(30):
        dual = random_lie(rng, 3)
        bi = LieBialgebra(LieAlgebra.abelian(3), dual)  # validates
        assert cocycle_defect(bi).is_zero()
        mirrored = LieBialgebra(dual, LieAlgebra.abelian(3))
        assert cocycle_defect(mirrored).is_zero()
        count += 2
    assert count >= 60
    print(f"abelian family closure: {count} validated instances")


def test_pre_poisson_symmetry_on_flat_entries(catalog_models):
    count = 0
    for name, cx in _flat_complexes(catalog_models):
        n = cx.dim
        for i in range(n):
            for j in range(n):
                a = FormElement.basis_covector(n, i + 1)
                b = FormElement.basis_covector(n, j + 1)
                assert pre_poisson_bracket(cx, a, b) == pre_poisson_bracket(cx, b, a)
                count += 1
    assert count >= 50
    print(f"pre-poisson symmetry (flat entries): {count} exact assertions")
