import random
from fractions import Fraction

import pytest

from helpers import (
    cofactor_determinant,
    oracle_curvature,
    oracle_levi_civita,
    random_lie,
    random_metric,
)
from plie.errors import InvalidInputError, SingularMatrixError, UnsupportedInputError
from plie.lie import LieAlgebra, LieBialgebra, linearized_poisson
from plie.metric import (
    MetricForm,
    complete_lift_metric,
    contravariant_from_covariant,
    curvature,
    levi_civita,
    metric_parallel_defect,
    nabla_curvature,
    prla_defect,
    prpl_abelian_base_check,
    prpl_pointwise_defect,
    torsion_defect,
)
from plie.tensor import Tensor

F = Fraction

H3 = LieAlgebra(3, {(0, 1): [0, 0, 1]})
R3_LAMBDA = LieAlgebra(3, {(0, 1): [0, 0, -1], (0, 2): [0, 1, 0]})
SO3 = LieAlgebra(3, {(0, 1): [0, 0, 1], (0, 2): [0, -1, 0], (1, 2): [1, 0, 0]})
I3 = MetricForm.identity(3)


class TestMetricForm:
    def test_inverse_times_matrix_is_identity(self):
        m = MetricForm([[2, 1, 0], [1, 1, 0], [0, 0, "1/3"]])
        n = m.dim
        product = [
            [sum(m.matrix[i][k] * m.inverse[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert product == [[F(int(i == j)) for j in range(n)] for i in range(n)]

    def test_rejects_asymmetric(self):
        with pytest.raises(InvalidInputError):
            MetricForm([[1, 2], [0, 1]])

    def test_rejects_degenerate_at_construction(self):
        with pytest.raises(SingularMatrixError) as err:
            MetricForm([[1, 1], [1, 1]])
        assert err.value.rank == 1

    def test_identity_inverse(self):
        assert contravariant_from_covariant(I3) == I3

    def test_diagonal_inversion(self):
        m = MetricForm([[2, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert contravariant_from_covariant(m).matrix[0][0] == F(1, 2)

    def test_swap_block_self_inverse(self):
        rows = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
        m = MetricForm(rows)
        assert contravariant_from_covariant(m) == m


class TestLeviCivita:
    def test_r3_lambda_fixture(self):
        conn = levi_civita(R3_LAMBDA, I3)
        assert conn.basis(0, 1) == (0, 0, -1)  # lambda e3 at lambda = -1
        assert conn.basis(1, 0) == (0, 0, 0)
        assert conn.basis(0, 2) == (0, 1, 0)  # -lambda e2

    def test_abelian_gives_zero(self):
        assert levi_civita(LieAlgebra.abelian(3), I3).is_zero()

    def test_so3_is_half_bracket(self):
        conn = levi_civita(SO3, I3)
        for i in range(3):
            for j in range(3):
                expected = tuple(F(1, 2) * c for c in SO3.bracket_basis(i, j))
                assert conn.basis(i, j) == expected

    def test_against_cramer_oracle(self):
        rng = random.Random(40)
        for _ in range(8):
            alg = random_lie(rng, 3)
            metric = random_metric(rng, 3)
            conn = levi_civita(alg, metric)
            oracle = oracle_levi_civita(alg, metric)
            for i in range(3):
                for j in range(3):
                    assert list(conn.basis(i, j)) == oracle[(i, j)]

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            levi_civita(H3, MetricForm.identity(2))


class TestDefiningDefects:
    def test_levi_civita_outputs_are_torsion_free_and_parallel(self):
        rng = random.Random(41)
        for _ in range(10):
            alg = random_lie(rng, 3)
            metric = random_metric(rng, 3)
            conn = levi_civita(alg, metric)
            assert torsion_defect(conn, alg).is_zero()
            assert metric_parallel_defect(conn, metric).is_zero()

    def test_zero_connection_torsion_is_minus_bracket(self):
        from plie.metric import InfinitesimalConnection

        conn = InfinitesimalConnection.zero(3)
        defect = torsion_defect(conn, H3)
        assert defect[(0, 1, 2)] == -1
        assert defect[(1, 0, 2)] == 1

    def test_parallel_defect_example(self):
        conn = levi_civita(R3_LAMBDA, I3)
        basis = [tuple(F(int(r == s)) for s in range(3)) for r in range(3)]
        value = I3.pair(conn.basis(0, 1), basis[2]) + I3.pair(basis[1], conn.basis(0, 2))
        assert value == 0

    def test_zero_connection_parallel_defect_vanishes(self):
        from plie.metric import InfinitesimalConnection

        assert metric_parallel_defect(InfinitesimalConnection.zero(3), I3).is_zero()


class TestUniqueness:
    def test_perturbed_connection_breaks_a_defining_defect(self):
        # the defining linear system has a unique solution: any symmetric
        # perturbation keeps the torsion defect zero but must break metric
        # parallelism (and an antisymmetric one breaks torsion-freeness)
        rng = random.Random(46)
        for _ in range(6):
            alg = random_lie(rng, 3)
            metric = random_metric(rng, 3)
            conn = levi_civita(alg, metric)
            bump = F(rng.randint(1, 5), rng.randint(1, 5))
            sym = [
                [
                    [conn.basis(i, j)[k] + (bump if (i, j, k) in ((0, 1, 0), (1, 0, 0)) else 0)
                     for k in range(3)]
                    for j in range(3)
                ]
                for i in range(3)
            ]
            from plie.metric import InfinitesimalConnection

            perturbed = InfinitesimalConnection(
                Tensor((3, 3, 3), [sym[i][j][k] for i in range(3) for j in range(3) for k in range(3)])
            )
            assert torsion_defect(perturbed, alg).is_zero()
            assert not metric_parallel_defect(perturbed, metric).is_zero()

    def test_koszul_system_consistency(self):
        # 2 a(A_i e_j, e_l) equals the bracket combination for all triples
        rng = random.Random(47)
        for _ in range(5):
            alg = random_lie(rng, 3)
            metric = random_metric(rng, 3)
            conn = levi_civita(alg, metric)
            basis = [tuple(F(int(r == s)) for s in range(3)) for r in range(3)]
            for i in range(3):
                for j in range(3):
                    for l in range(3):
                        lhs = 2 * metric.pair(conn.basis(i, j), basis[l])
                        rhs = (
                            metric.pair(alg.bracket_basis(i, j), basis[l])
                            + metric.pair(alg.bracket_basis(l, i), basis[j])
                            + metric.pair(alg.bracket_basis(l, j), basis[i])
                        )
                        assert lhs == rhs


class TestCurvature:
    def test_r3_lambda_flat_via_oracle(self):
        conn = levi_civita(R3_LAMBDA, I3)
        gamma = {(i, j): list(conn.basis(i, j)) for i in range(3) for j in range(3)}
        oracle = oracle_curvature(gamma, R3_LAMBDA)
        assert all(not any(vec) for vec in oracle.values())
        assert curvature(conn, R3_LAMBDA).is_zero()

    def test_abelian_zero(self):
        conn = levi_civita(LieAlgebra.abelian(3), I3)
        assert curvature(conn, LieAlgebra.abelian(3)).is_zero()

    def test_so3_sectional_value(self):
        r = curvature(levi_civita(SO3, I3), SO3)
        assert r.basis(0, 1, 1) == (F(1, 4), 0, 0)

    def test_matches_oracle_on_random_input(self):
        rng = random.Random(42)
        for _ in range(6):
            alg = random_lie(rng, 3)
            metric = random_metric(rng, 3)
            conn = levi_civita(alg, metric)
            r = curvature(conn, alg)
            gamma = {(i, j): list(conn.basis(i, j)) for i in range(3) for j in range(3)}
            oracle = oracle_curvature(gamma, alg)
            for key, vec in oracle.items():
                assert list(r.basis(*key)) == vec

    def test_antisymmetry(self):
        r = curvature(levi_civita(SO3, I3), SO3)
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    assert r.basis(i, j, k) == tuple(-v for v in r.basis(j, i, k))


class TestNablaCurvature:
    def test_flat_instances_vanish(self):
        conn = levi_civita(R3_LAMBDA, I3)
        r = curvature(conn, R3_LAMBDA)
        assert nabla_curvature(conn, r, R3_LAMBDA).is_zero()

    def test_so3_locally_symmetric(self):
        conn = levi_civita(SO3, I3)
        r = curvature(conn, SO3)
        assert nabla_curvature(conn, r, SO3).is_zero()

    def test_abelian_zero(self):
        alg = LieAlgebra.abelian(2)
        conn = levi_civita(alg, MetricForm.identity(2))
        assert nabla_curvature(conn, curvature(conn, alg), alg).is_zero()

    def test_termwise_expansion(self):
        rng = random.Random(43)
        alg = random_lie(rng, 3)
        metric = random_metric(rng, 3)
        conn = levi_civita(alg, metric)
        r = curvature(conn, alg)
        nabla = nabla_curvature(conn, r, alg)
        basis = [tuple(F(int(p == s)) for s in range(3)) for p in range(3)]
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    for d in range(3):
                        term = list(conn.apply(basis[a], r.basis(b, c, d)))
                        for l in range(3):
                            term[l] -= r.apply(conn.basis(a, b), basis[c], basis[d])[l]
                            term[l] -= r.apply(basis[b], basis[c], conn.basis(a, d))[l]
                            term[l] -= r.apply(basis[b], conn.basis(a, c), basis[d])[l]
                        assert tuple(term) == tuple(
                            nabla[(a, b, c, d, l)] for l in range(3)
                        )


class TestPrla:
    def test_r3_lambda_identity_passes(self):
        assert prla_defect(R3_LAMBDA, I3).is_zero()

    def test_abelian_passes(self):
        assert prla_defect(LieAlgebra.abelian(3), I3).is_zero()

    def test_so3_identity_fails_with_known_value(self):
        defect = prla_defect(SO3, I3)
        assert tuple(defect[(0, 1, 1, l)] for l in range(3)) == (F(-1, 2), 0, 0)

    def test_heisenberg_searched_metric_passes(self):
        searched = MetricForm([[-1, -1, -1], [-1, -1, 0], [-1, 0, 0]])
        assert prla_defect(H3, searched).is_zero()


class TestPrpl:
    def test_reduces_to_prla_at_identity(self):
        # pi = 0 and T = identity turn the pointwise defect into the
        # pseudo-Riemannian defect with the middle slots swapped
        bi = LieBialgebra(LieAlgebra.abelian(3), SO3)
        zero_pi = Tensor.zeros((3, 3))
        identity = Tensor.from_function((3, 3), lambda idx: F(int(idx[0] == idx[1])))
        pointwise = prpl_pointwise_defect(bi, I3, zero_pi, identity)
        plain = prla_defect(SO3, I3)
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    for l in range(3):
                        assert pointwise[(i, j, k, l)] == plain[(i, k, j, l)]

    def test_abelian_dual_vanishes_for_any_pi(self):
        bi = LieBialgebra(H3, LieAlgebra.abelian(3))
        pi = Tensor((3, 3), [0, 1, 0, -1, 0, 2, 0, -2, 0])
        identity = Tensor.from_function((3, 3), lambda idx: F(int(idx[0] == idx[1])))
        assert prpl_pointwise_defect(bi, I3, pi, identity).is_zero()

    def test_rejects_non_antisymmetric_pi(self):
        bi = LieBialgebra(LieAlgebra.abelian(3), SO3)
        identity = Tensor.from_function((3, 3), lambda idx: F(int(idx[0] == idx[1])))
        with pytest.raises(InvalidInputError):
            prpl_pointwise_defect(bi, I3, identity, identity)

    def test_r3_lambda_pointwise_zero_at_basis_points(self):
        bi = LieBialgebra(LieAlgebra.abelian(3), R3_LAMBDA)
        identity = Tensor.from_function((3, 3), lambda idx: F(int(idx[0] == idx[1])))
        for m in range(3):
            point = tuple(F(int(s == m)) for s in range(3))
            pi = linearized_poisson(bi, point)
            assert prpl_pointwise_defect(bi, I3, pi, identity).is_zero()

    def test_abelian_base_check_passes_r3_lambda(self):
        bi = LieBialgebra(LieAlgebra.abelian(3), R3_LAMBDA)
        assert prpl_abelian_base_check(bi, I3).passed

    def test_abelian_base_check_fails_so3_with_witness(self):
        bi = LieBialgebra(LieAlgebra.abelian(3), SO3)
        verdict = prpl_abelian_base_check(bi, I3)
        assert not verdict.passed
        assert verdict.witness is not None
        assert set(verdict.witness) == {"point", "triple", "component", "value"}

    def test_abelian_base_check_passes_trivial(self):
        bi = LieBialgebra(LieAlgebra.abelian(3), LieAlgebra.abelian(3))
        assert prpl_abelian_base_check(bi, I3).passed

    def test_non_abelian_base_rejected(self):
        bi = LieBialgebra(H3, LieAlgebra.abelian(3))
        with pytest.raises(UnsupportedInputError):
            prpl_abelian_base_check(bi, I3)


class TestCompleteLift:
    def test_identity_lifts_to_neutral_block_form(self):
        lifted = complete_lift_metric(I3)
        expect = [[F(0)] * 3 + [F(int(i == j)) for j in range(3)] for i in range(3)]
        expect += [[F(int(i == j)) for j in range(3)] + [F(0)] * 3 for i in range(3)]
        assert [list(row) for row in lifted.matrix] == expect

    def test_first_block_pairs_to_zero(self):
        rng = random.Random(44)
        a = random_metric(rng, 3)
        lifted = complete_lift_metric(a)
        for i in range(3):
            for j in range(3):
                assert lifted.matrix[i][j] == 0

    def test_determinant_is_signed_square(self):
        rng = random.Random(45)
        for n in (2, 3):
            a = random_metric(rng, n)
            lifted = complete_lift_metric(a)
            det = cofactor_determinant([list(r) for r in lifted.matrix])
            base = cofactor_determinant([list(r) for r in a.matrix])
            sign = -1 if n % 2 else 1
            assert det == sign * base * base
            assert det != 0
