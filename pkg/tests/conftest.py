from fractions import Fraction
from math import comb

import pytest


def classical_euler_numbers(n_max):
    """E_n(0) from E_n(1) + E_n(0) = 2 * 0^n with E_n(1) = sum_k C(n, k) E_k."""
    values = []
    for n in range(n_max + 1):
        rhs = Fraction(2 if n == 0 else 0)
        acc = sum((comb(n, k) * values[k] for k in range(n)), Fraction(0))
        values.append((rhs - acc) / 2)
    return values


@pytest.fixture
def euler_oracle():
    return classical_euler_numbers


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
