from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from changhee.characters import quadratic_character
from changhee.errors import DomainError, NonUnitDenominatorError, NotStabilizedError
from changhee.padic import (
    IntegrandSpec,
    PadicResidue,
    brute_force_double_sum,
    factorized_partial_sum,
    fermionic_partial_sum,
    measure_value,
    multivariate_integral,
    partial_sums,
    reduce_mod,
    stabilized_integral,
)
from changhee.qeuler import QEulerSpec, generalized_q_euler_table, q_euler_table


class TestReduceMod:
    def test_minus_half_mod_9(self):
        assert reduce_mod(Fraction(-1, 2), 3, 2).value == 4

    def test_integer(self):
        assert reduce_mod(7, 5, 3).value == 7
        assert reduce_mod(-7, 3, 2).value == 2

    def test_non_unit_denominator(self):
        with pytest.raises(NonUnitDenominatorError):
            reduce_mod(Fraction(1, 3), 3, 2)

    @given(
        st.fractions(-50, 50, max_denominator=40).filter(lambda v: v.denominator % 3),
        st.fractions(-50, 50, max_denominator=40).filter(lambda v: v.denominator % 3),
    )
    def test_ring_homomorphism(self, u, v):
        assert reduce_mod(u * v, 3, 5) == reduce_mod(u, 3, 5) * reduce_mod(v, 3, 5)
        assert reduce_mod(u + v, 3, 5) == reduce_mod(u, 3, 5) + reduce_mod(v, 3, 5)


def test_residue_json_and_inverse():
    r = PadicResidue(3, 3, 22)  # 22 = 1 + 1*3 + 2*9
    assert r.to_json() == {"p": 3, "M": 3, "value": "22", "digits": [1, 1, 2]}
    assert (r * r.inverse()).value == 1
    with pytest.raises(NonUnitDenominatorError):
        PadicResidue(3, 3, 6).inverse()


class TestMeasure:
    def test_uniform_at_q_one(self):
        assert all(measure_value(j, 2, 3, 1, 1) == Fraction(1, 9) for j in range(9))

    def test_fermionic_point(self):
        assert measure_value(2, 1, 3, 1, -1) == 1

    @pytest.mark.parametrize("q", [1, -1, 2])
    @pytest.mark.parametrize("N", [0, 1, 2, 3, 4])
    @pytest.mark.parametrize("p, d", [(3, 1), (5, 3)])
    def test_total_mass_one(self, q, N, p, d):
        assert sum(measure_value(j, N, p, d, q) for j in range(d * p**N)) == 1


class TestPartialSums:
    def test_constant_integrand(self):
        spec = IntegrandSpec(n=0, p=3)
        assert [fermionic_partial_sum(spec, N, 4).value for N in range(1, 5)] == [1, 1, 1, 1]

    @pytest.mark.parametrize("N", [1, 2, 3])
    def test_identity_integrand_closed_form(self, N):
        spec = IntegrandSpec(n=1, p=3)
        assert fermionic_partial_sum(spec, N, 8).value == (3**N - 1) // 2

    def test_identity_integrand_tends_to_minus_half(self):
        spec = IntegrandSpec(n=1, p=3)
        assert stabilized_integral(spec, 5).residue == reduce_mod(Fraction(-1, 2), 3, 5)

    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_level_refinement(self, p, n):
        M = 6
        spec = IntegrandSpec(n=n, p=p, q=1 + p, x=1)
        sums = partial_sums(spec, range(1, 6), M)
        for N in range(1, 5):
            mod = p ** min(M, N)
            assert (sums[N] - sums[N - 1]) % mod == 0

    def test_integrand_validation(self):
        with pytest.raises(DomainError):
            IntegrandSpec(n=1, p=3, q=2)
        with pytest.raises(DomainError):
            IntegrandSpec(n=1, p=3, d=3)
        with pytest.raises(DomainError):
            IntegrandSpec(n=1, p=4)


class TestStabilization:
    def test_constant_stabilizes_at_level_one(self):
        s = stabilized_integral(IntegrandSpec(n=0, p=3), 6)
        assert (s.level, s.residue.value) == (1, 1)

    def test_first_moment_q4(self):
        s = stabilized_integral(IntegrandSpec(n=1, p=3, q=4), 6, N_max=8)
        assert s.residue == reduce_mod(Fraction(-8, 25), 3, 6)
        assert s.level <= 8

    def test_fourth_moment_p5(self):
        s = stabilized_integral(IntegrandSpec(n=4, p=5, q=6), 4)
        exact = q_euler_table(QEulerSpec.simple(6), 4)[4]
        assert s.residue == reduce_mod(exact, 5, 4)

    def test_not_stabilized(self):
        with pytest.raises(NotStabilizedError) as info:
            stabilized_integral(IntegrandSpec(n=1, p=3), 10, N_max=3)
        assert len(info.value.last_residues) == 2

    def test_twisted_over_x3(self):
        chi = quadratic_character(3)
        table = generalized_q_euler_table(chi, (1,), (1,), 6, 3)
        for n in range(4):
            s = stabilized_integral(IntegrandSpec(n, 5, 6, 0, 1, 1, 3, chi), 5)
            assert s.residue == reduce_mod(table[n], 5, 5)


class TestMultivariate:
    @pytest.mark.parametrize("N", [1, 2])
    @pytest.mark.parametrize("n", [0, 1, 2, 4])
    def test_factorized_equals_brute_force(self, N, n):
        args = (n, 2, (1, 3), (2, 1), 4, 3, N, 6)
        assert factorized_partial_sum(*args) == brute_force_double_sum(*args)

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_against_exact(self, n):
        a, b = (1, 2), (2, 1)
        got = multivariate_integral(n, 1, a, b, 6, 5, 4)
        exact = q_euler_table(QEulerSpec(a, b, 6, 1), n)[n]
        assert got.residue == reduce_mod(exact, 5, 4)
        assert all(level <= 8 for level in got.levels)

    def test_brute_force_is_two_dimensional(self):
        with pytest.raises(DomainError):
            brute_force_double_sum(1, 0, (1,), (1,), 4, 3, 1, 3)
