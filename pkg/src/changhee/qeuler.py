"""Exact q-Euler numbers and polynomials from their generating functions.

For positive integers ``a = (a_1..a_r)``, ``b = (b_1..b_r)`` and a rational
``q`` the order-``r`` polynomials are read off from

    2^r e^{xt} / prod_j (q^{b_j} e^{a_j t} + 1) = sum_n E_n(x) t^n / n!

and the character-twisted numbers from the finite-sum numerator over one
period of the character.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, prod
from typing import Sequence

from .characters import DirichletCharacter
from .errors import DomainError, SingularSpecError, WrongPipelineError
from .exact import (
    TruncatedSeries,
    as_rational,
    format_rational,
    series_constant,
    series_exp_linear,
)

__all__ = [
    "QEulerSpec",
    "QEulerTable",
    "distribution_identity_residual",
    "distribution_identity_sides",
    "evaluate_polynomial",
    "generalized_generating_series",
    "generalized_q_euler_table",
    "generating_series",
    "q_euler_polynomial_expand",
    "q_euler_table",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class QEulerSpec:
    a: tuple[int, ...]
    b: tuple[int, ...]
    q: Fraction = Fraction(1)
    x: Fraction = Fraction(0)

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "q", as_rational(self.q))
        object.__setattr__(self, "x", as_rational(self.x))
        if len(a) == 0 or len(a) != len(b):
            raise DomainError("a and b must be non-empty and of equal length")
        if any(not isinstance(v, int) or v < 1 for v in a + b):
            raise DomainError("all a_j and b_j must be positive integers")
        for bj in b:
            if 1 + self.q**bj == 0:
                raise SingularSpecError(f"1 + q^{bj} = 0 for q = {self.q}")

    @classmethod
    def simple(cls, q=1, x=0, r: int = 1) -> QEulerSpec:
        """All-ones ``a`` and ``b`` of length ``r``."""
        return cls((1,) * r, (1,) * r, q, x)

    @property
    def r(self) -> int:
        return len(self.a)

    def with_x(self, x) -> QEulerSpec:
        return QEulerSpec(self.a, self.b, self.q, x)

    def with_q(self, q) -> QEulerSpec:
        return QEulerSpec(self.a, self.b, q, self.x)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "a": list(self.a),
            "b": list(self.b),
            "q": format_rational(self.q),
            "x": format_rational(self.x),
        }


@dataclass(frozen=True)
class QEulerTable:
    spec: QEulerSpec
    n_max: int
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "values": [format_rational(v) for v in self.values]}


def _denominator(a: Sequence[int], b: Sequence[int], q: Fraction, scale: int, order: int):
    """prod_j (q^{scale b_j} e^{scale a_j t} + 1) as a truncated series."""
    den = series_constant(1, order)
    for aj, bj in zip(a, b):
        qb = q ** (scale * bj)
        if qb == -1:
            raise SingularSpecError(f"q^{scale * bj} = -1 makes the denominator singular")
        den = den * (series_exp_linear(scale * aj, order) * qb + 1)
    return den


def generating_series(spec: QEulerSpec, order: int) -> TruncatedSeries:
    num = series_exp_linear(spec.x, order) * (2**spec.r)
    return num / _denominator(spec.a, spec.b, spec.q, 1, order)


def q_euler_table(spec: QEulerSpec, n_max: int) -> QEulerTable:
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    values = generating_series(spec, n_max).egf_values()
    return QEulerTable(spec, n_max, tuple(values))


def q_euler_polynomial_expand(spec: QEulerSpec, n_max: int) -> list[list[Fraction]]:
    """Coefficient lists (ascending powers of x) of E_0(x) .. E_{n_max}(x).

    The ``x`` of ``spec`` is ignored; the polynomials come from the numbers at
    ``x = 0`` by the binomial shift E_n(x) = sum_k C(n, k) E_k x^{n-k}.
    """
    numbers = q_euler_table(spec.with_x(0), n_max).values
    polys = []
    for n in range(n_max + 1):
        polys.append([comb(n, m) * numbers[n - m] for m in range(n + 1)])
    return polys


def evaluate_polynomial(coeffs: Sequence[Fraction], x) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _require_real(chi: DirichletCharacter) -> None:
    if not chi.is_real:
        raise WrongPipelineError("the exact engine accepts real-valued characters only")


def generalized_generating_series(
    chi: DirichletCharacter, a: Sequence[int], b: Sequence[int], q, order: int
) -> TruncatedSeries:
    _require_real(chi)
    spec = QEulerSpec(tuple(a), tuple(b), q)  # validates a, b, q
    f, r, q = chi.conductor, spec.r, spec.q
    num = series_constant(0, order)
    for idx in product(range(f), repeat=r):
        weight = prod(chi(n) for n in idx)
        if weight == 0:
            continue
        sign = -1 if sum(idx) % 2 else 1
        coeff = 2**r * sign * weight * q ** sum(bj * n for bj, n in zip(spec.b, idx))
        shift = sum(aj * n for aj, n in zip(spec.a, idx))
        num = num + series_exp_linear(shift, order) * coeff
    return num / _denominator(spec.a, spec.b, q, f, order)


def generalized_q_euler_table(
    chi: DirichletCharacter, a: Sequence[int], b: Sequence[int], q, n_max: int
) -> list[Fraction]:
    """Character-twisted numbers E_{n,chi,q}(a; b) for n = 0 .. n_max."""
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    return generalized_generating_series(chi, a, b, q, n_max).egf_values()


def distribution_identity_sides(
    chi: DirichletCharacter, a: Sequence[int], b: Sequence[int], q, f: int, n: int
) -> tuple[Fraction, Fraction]:
    """Both sides of the distribution relation at index ``n``.

    The right side is f^n times the signed, character-weighted sum over
    residues of the plain polynomials at q^f evaluated at (sum a_j n_j) / f.
    """
    _require_real(chi)
    if f != chi.conductor:
        raise DomainError(f"f = {f} does not match the conductor {chi.conductor}")
    if n < 0:
        raise DomainError("n must be non-negative")
    q = as_rational(q)
    lhs = generalized_q_euler_table(chi, a, b, q, n)[n]

    inner = QEulerSpec(tuple(a), tuple(b), q**f)
    poly_n = q_euler_polynomial_expand(inner, n)[n]
    total = Fraction(0)
    for idx in product(range(f), repeat=len(a)):
        weight = prod(chi(k) for k in idx)
        if weight == 0:
            continue
        sign = -1 if sum(idx) % 2 else 1
        qpow = q ** sum(bj * k for bj, k in zip(b, idx))
        shift = Fraction(sum(aj * k for aj, k in zip(a, idx)), f)
        total += sign * weight * qpow * evaluate_polynomial(poly_n, shift)
    rhs = f**n * total
    return lhs, rhs


def distribution_identity_residual(
    chi: DirichletCharacter, a: Sequence[int], b: Sequence[int], q, f: int, n: int
) -> Fraction:
    lhs, rhs = distribution_identity_sides(chi, a, b, q, f, n)
    residual = lhs - rhs
    if n % 2 == 0:
        log.info("distribution identity at even n=%d: residual %s", n, residual)
    return residual
