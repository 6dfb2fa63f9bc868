"""Dirichlet characters of odd conductor, stored as one period of values.

Real characters (values in {-1, 0, 1}) keep :class:`~fractions.Fraction`
values and can feed the exact engine.  Anything else is held as Python
``complex`` and is only accepted by the analytic engine.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Sequence, Union

from .errors import DomainError, InvalidCharacterError

__all__ = [
    "DirichletCharacter",
    "character_from_table",
    "chi_eval",
    "load_character",
    "parse_character_text",
    "primitive_root_character",
    "quadratic_character",
    "trivial_character",
]

ROOT_TOL = 1e-12
Value = Union[Fraction, complex]


@dataclass(frozen=True)
class DirichletCharacter:
    conductor: int
    values: tuple
    mode: str  # "real" or "complex"
    true_conductor: int = field(default=0, compare=False)

    @property
    def is_real(self) -> bool:
        return self.mode == "real"

    def __call__(self, n: int) -> Value:
        return self.values[n % self.conductor]

    def complex_values(self) -> tuple[complex, ...]:
        return tuple(complex(v) for v in self.values)

    def to_text(self) -> str:
        cells = []
        for v in self.values:
            if isinstance(v, Fraction):
                cells.append(str(int(v)))
            else:
                cells.append(f"{v.real!r},{v.imag!r}")
        return f"{self.conductor}\n{' '.join(cells)}\n"


def _normalize(value) -> Value:
    if isinstance(value, str):
        text = value.strip()
        if "," in text:
            re_, im_ = text.split(",", 1)
            value = complex(float(re_), float(im_))
        else:
            value = Fraction(int(text))
    if isinstance(value, complex):
        if value.imag == 0 and value.real in (-1.0, 0.0, 1.0):
            return Fraction(int(value.real))
        return value
    if isinstance(value, float):
        if value in (-1.0, 0.0, 1.0):
            return Fraction(int(value))
        return complex(value)
    return Fraction(value)


def _unit_group_exponent(f: int) -> int:
    """Carmichael exponent of (Z/f)^*, by brute-force element orders."""
    exponent = 1
    for u in range(1, f):
        if gcd(u, f) != 1:
            continue
        order, power = 1, u % f
        while power != 1 % f:
            power = power * u % f
            order += 1
        exponent = exponent * order // gcd(exponent, order)
    return exponent


def _close(u: Value, v: Value, exact: bool) -> bool:
    if exact:
        return u == v
    return abs(complex(u) - complex(v)) <= ROOT_TOL


def _induced_modulus(f: int, values: Sequence[Value], exact: bool) -> int:
    """Smallest divisor d of f such that the character factors through (Z/d)^*."""
    for d in range(1, f + 1):
        if f % d:
            continue
        if all(
            _close(values[n], 1, exact)
            for n in range(1, f)
            if gcd(n, f) == 1 and n % d == 1 % d
        ):
            return d
    return f


def character_from_table(f: int, values: Sequence, strict: bool = True) -> DirichletCharacter:
    """Validate one period of character values.

    With ``strict`` a non-primitive table (one induced from a smaller modulus)
    is rejected; otherwise it is accepted with a warning and the computed
    conductor is kept in ``true_conductor``.
    """
    if not isinstance(f, int) or f < 1 or f % 2 == 0:
        raise InvalidCharacterError(f"conductor must be an odd positive integer, got {f!r}")
    if len(values) != f:
        raise InvalidCharacterError(f"expected {f} values, got {len(values)}")
    vals = tuple(_normalize(v) for v in values)
    exact = all(isinstance(v, Fraction) for v in vals)
    if exact and any(v not in (-1, 0, 1) for v in vals):
        raise InvalidCharacterError("real character values must lie in {-1, 0, 1}")

    if f == 1:
        if not _close(vals[0], 1, exact):
            raise InvalidCharacterError("the conductor-one character takes the value 1")
        return DirichletCharacter(1, (Fraction(1),), "real", 1)

    for n, v in enumerate(vals):
        is_zero = _close(v, 0, exact)
        if is_zero != (gcd(n, f) > 1):
            raise InvalidCharacterError(
                f"chi({n}) = {v} but gcd({n}, {f}) = {gcd(n, f)}", pair=(n, n)
            )
    if not _close(vals[1], 1, exact):
        raise InvalidCharacterError("chi(1) must be 1", pair=(1, 1))

    units = [n for n in range(1, f) if gcd(n, f) == 1]
    for m in units:
        for n in units:
            if not _close(vals[m * n % f], vals[m] * vals[n], exact):
                raise InvalidCharacterError(
                    f"not multiplicative: chi({m}*{n}) != chi({m})*chi({n})", pair=(m, n)
                )

    exponent = _unit_group_exponent(f)
    for n in units:
        if not _close(vals[n] ** exponent, 1, exact):
            raise InvalidCharacterError(
                f"chi({n}) is not a root of unity of order dividing {exponent}", pair=(n, n)
            )

    true_f = _induced_modulus(f, vals, exact)
    if true_f != f:
        msg = f"table of period {f} is induced from modulus {true_f}; not primitive"
        if strict:
            raise InvalidCharacterError(msg)
        warnings.warn(msg, stacklevel=2)

    return DirichletCharacter(f, vals, "real" if exact else "complex", true_f)


def trivial_character() -> DirichletCharacter:
    return character_from_table(1, (1,))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def quadratic_character(p: int) -> DirichletCharacter:
    """Legendre symbol mod an odd prime ``p``, via Euler's criterion."""
    if not _is_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    half = (p - 1) // 2
    values = [0]
    for n in range(1, p):
        values.append(1 if pow(n, half, p) == 1 else -1)
    return character_from_table(p, values)


def chi_eval(chi: DirichletCharacter, n: int) -> Value:
    return chi(n)


def parse_character_text(text: str, strict: bool = True) -> DirichletCharacter:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise InvalidCharacterError("character file needs a conductor line and a value line")
    try:
        f = int(lines[0].strip())
    except ValueError as exc:
        raise InvalidCharacterError(f"bad conductor line {lines[0]!r}") from exc
    try:
        return character_from_table(f, lines[1].split(), strict=strict)
    except ValueError as exc:
        if isinstance(exc, InvalidCharacterError):
            raise
        raise InvalidCharacterError(f"bad character value: {exc}") from exc


def load_character(path: Union[str, Path], strict: bool = True) -> DirichletCharacter:
    return parse_character_text(Path(path).read_text(), strict=strict)


def primitive_root_character(f: int, generator: int, image: complex) -> DirichletCharacter:
    """Character mod prime ``f`` sending ``generator`` to ``image``.

    Convenience builder for complex characters in tests and the CLI.
    """
    values: list = [0] * f
    power, value = 1, complex(1)
    for _ in range(f - 1):
        values[power] = value
        power = power * generator % f
        value *= image
    return character_from_table(f, values)
