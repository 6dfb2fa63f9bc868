"""Exact rational scalars and truncated power series in ``t``.

Scalars are :class:`fractions.Fraction`.  A :class:`TruncatedSeries` keeps the
plain Taylor coefficients of ``t^0 .. t^N``; the ``n!`` scaling used by
exponential generating functions is applied by callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DomainError, SingularSeriesError

__all__ = [
    "ExactRational",
    "TruncatedSeries",
    "as_rational",
    "format_rational",
    "parse_rational",
    "q_bracket",
    "q_pochhammer",
    "series_constant",
    "series_div",
    "series_exp_linear",
    "series_mul",
]

ExactRational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise DomainError("empty rational literal")
    try:
        num, sep, den = text.partition("/")
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    # str(Fraction) already omits a unit denominator
    return str(Fraction(value))


def q_bracket(x: int, q) -> Fraction:
    """The q-number ``(1 - q**x) / (1 - q)``, equal to ``x`` at ``q = 1``."""
    q = as_rational(q)
    if q == 1:
        return Fraction(x)
    if q == 0 and x < 0:
        raise DomainError("q = 0 with negative exponent")
    return (1 - q**x) / (1 - q)


def q_pochhammer(a, q, n: int) -> Fraction:
    """Product of ``(1 - a q^k)`` over ``k = 0 .. n-1``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    a, q = as_rational(a), as_rational(q)
    prod = Fraction(1)
    term = a
    for _ in range(n):
        prod *= 1 - term
        term *= q
    return prod


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coefficients", tuple(as_rational(c) for c in self.coefficients)
        )

    @classmethod
    def from_coefficients(cls, coeffs: Iterable) -> TruncatedSeries:
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[: order + 1])

    def _common(self, other: TruncatedSeries) -> tuple[Sequence, Sequence]:
        n = min(self.order, other.order) + 1
        return self.coefficients[:n], other.coefficients[:n]

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = series_constant(other, self.order)
        u, v = self._common(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(u, v)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        c = as_rational(other)
        return TruncatedSeries(tuple(c * x for x in self.coefficients))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        c = as_rational(other)
        if c == 0:
            raise SingularSeriesError("division of a series by zero")
        return TruncatedSeries(tuple(x / c for x in self.coefficients))

    def egf_values(self) -> list[Fraction]:
        """``k! * coefficient k``, i.e. the values of an exponential generating function."""
        return [factorial(k) * c for k, c in enumerate(self.coefficients)]


def series_constant(c, order: int) -> TruncatedSeries:
    return TruncatedSeries((as_rational(c),) + (Fraction(0),) * order)


def series_mul(u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller of the two orders."""
    a, b = u._common(v)
    n = len(a)
    out = []
    for k in range(n):
        out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def series_div(u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
    """Exact long division ``u / v``; ``v`` must have a nonzero constant term."""
    a, b = u._common(v)
    if b[0] == 0:
        raise SingularSeriesError("divisor has zero constant term")
    inv0 = 1 / b[0]
    out: list[Fraction] = []
    for k in range(len(a)):
        acc = a[k] - sum((out[i] * b[k - i] for i in range(k)), Fraction(0))
        out.append(acc * inv0)
    return TruncatedSeries(tuple(out))


def series_exp_linear(c, order: int) -> TruncatedSeries:
    """Taylor coefficients of ``exp(c t)`` through ``t^order``."""
    c = as_rational(c)
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / k)
    return TruncatedSeries(tuple(coeffs))
