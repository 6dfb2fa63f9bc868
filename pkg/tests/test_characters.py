import cmath
import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from changhee.characters import (
    character_from_table,
    chi_eval,
    parse_character_text,
    primitive_root_character,
    quadratic_character,
    trivial_character,
)
from changhee.errors import DomainError, InvalidCharacterError


def test_trivial_character():
    chi = character_from_table(1, (1,))
    assert all(chi_eval(chi, n) == 1 for n in range(1, 20))
    assert chi_eval(chi, 0) == 1


def test_quadratic_mod_3_table():
    chi = character_from_table(3, (0, 1, -1))
    assert chi.values == (0, 1, -1)
    assert chi.is_real


def test_principal_mod_3_is_not_primitive():
    with pytest.raises(InvalidCharacterError):
        character_from_table(3, (0, 1, 1))


def test_permissive_mode_records_true_conductor():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        chi = character_from_table(3, (0, 1, 1), strict=False)
    assert chi.true_conductor == 1
    assert caught


def test_multiplicativity_failure_names_pair():
    # mod 5: chi(2) = i forces chi(4) = -1, not 1
    with pytest.raises(InvalidCharacterError) as info:
        character_from_table(5, (0, 1, 1j, -1j, 1))
    assert info.value.pair is not None


def test_zero_pattern_enforced():
    with pytest.raises(InvalidCharacterError):
        character_from_table(3, (1, 1, -1))


def test_even_conductor_rejected():
    with pytest.raises(InvalidCharacterError):
        character_from_table(4, (0, 1, 0, -1))


@pytest.mark.parametrize(
    "p, table", [(3, (0, 1, -1)), (5, (0, 1, -1, -1, 1)), (7, (0, 1, 1, -1, 1, -1, -1))]
)
def test_quadratic_character(p, table):
    assert quadratic_character(p).values == tuple(Fraction(v) for v in table)


@pytest.mark.parametrize("p", [9, 1, 2, 15])
def test_quadratic_character_needs_odd_prime(p):
    with pytest.raises(DomainError):
        quadratic_character(p)


def test_chi_eval_examples():
    chi = quadratic_character(3)
    assert chi_eval(chi, 7) == 1
    assert chi_eval(chi, 6) == 0


def test_complex_character_mod_5():
    # 2 generates (Z/5)^*; sending it to i gives a primitive quartic character
    chi = primitive_root_character(5, 2, 1j)
    assert chi.mode == "complex"
    assert abs(chi(4) - (-1)) < 1e-15


def test_non_root_of_unity_rejected():
    z = cmath.exp(0.3j)
    with pytest.raises(InvalidCharacterError):
        primitive_root_character(5, 2, z)


def test_text_format_round_trip():
    chi = parse_character_text("5\n0 1 -1 -1 1\n")
    assert chi == quadratic_character(5)
    quartic = primitive_root_character(5, 2, 1j)
    assert parse_character_text(quartic.to_text()).values == pytest.approx(quartic.values)


CHARACTERS = [trivial_character(), quadratic_character(3), quadratic_character(5),
              quadratic_character(7), primitive_root_character(5, 2, 1j)]


@pytest.mark.parametrize("chi", CHARACTERS, ids=lambda c: f"f{c.conductor}-{c.mode}")
class TestCharacterLaws:
    @given(n=st.integers(0, 500))
    def test_periodic(self, chi, n):
        assert chi(n + chi.conductor) == chi(n)

    @given(m=st.integers(1, 200), n=st.integers(1, 200))
    def test_multiplicative(self, chi, m, n):
        assert abs(complex(chi(m * n)) - complex(chi(m)) * complex(chi(n))) < 1e-12

    def test_orthogonality(self, chi):
        total = sum(complex(chi(n)) for n in range(chi.conductor))
        expected = chi.conductor if chi.conductor == 1 else 0
        assert abs(total - expected) < 1e-12
