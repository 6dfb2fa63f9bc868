"""Fermionic p-adic integrals as stabilizing alternating Riemann sums mod p^M.

The measure of the cylinder ``j + d p^N Z_p`` is ``q^j / [d p^N]_q``; at
``q = -1`` with ``d p^N`` odd this is ``(-1)^j``.  An integrand
``y -> chi(y) q^{b y} (x + a y)^n`` is integrated by summing it against that
signed measure at increasing levels ``N`` until two consecutive levels agree
modulo ``p^M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd
from typing import Optional, Sequence

from .characters import DirichletCharacter
from .errors import DomainError, NonUnitDenominatorError, NotStabilizedError
from .exact import as_rational, q_bracket

__all__ = [
    "IntegrandSpec",
    "PadicResidue",
    "StabilizedIntegral",
    "brute_force_double_sum",
    "factorized_partial_sum",
    "fermionic_partial_sum",
    "measure_value",
    "MultivariateIntegral",
    "multivariate_integral",
    "partial_sums",
    "reduce_mod",
    "stabilized_integral",
]


@dataclass(frozen=True)
class PadicResidue:
    p: int
    M: int
    value: int

    def __post_init__(self):
        if self.M < 1:
            raise DomainError("precision M must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.M

    def _coerce(self, other) -> int:
        if isinstance(other, PadicResidue):
            if (other.p, other.M) != (self.p, self.M):
                raise DomainError("residues of different precision")
            return other.value
        return int(other)

    def __add__(self, other):
        return PadicResidue(self.p, self.M, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return PadicResidue(self.p, self.M, self.value - self._coerce(other))

    def __neg__(self):
        return PadicResidue(self.p, self.M, -self.value)

    def __mul__(self, other):
        return PadicResidue(self.p, self.M, self.value * self._coerce(other))

    __rmul__ = __mul__

    def inverse(self) -> PadicResidue:
        if self.value % self.p == 0:
            raise NonUnitDenominatorError(f"{self.value} is not a unit mod {self.p}")
        return PadicResidue(self.p, self.M, pow(self.value, -1, self.modulus))

    def reduce(self, M: int) -> PadicResidue:
        """Image in Z/p^M for a smaller precision ``M``."""
        if M > self.M:
            raise DomainError("cannot raise precision")
        return PadicResidue(self.p, M, self.value)

    def digits(self) -> list[int]:
        out, v = [], self.value
        for _ in range(self.M):
            v, d = divmod(v, self.p)
            out.append(d)
        return out

    def to_json(self) -> dict:
        return {"p": self.p, "M": self.M, "value": str(self.value), "digits": self.digits()}


def reduce_mod(v, p: int, M: int) -> PadicResidue:
    """Image of a rational with unit denominator in Z/p^M."""
    v = as_rational(v)
    if v.denominator % p == 0:
        raise NonUnitDenominatorError(f"denominator of {v} is divisible by {p}")
    mod = p**M
    return PadicResidue(p, M, v.numerator * pow(v.denominator, -1, mod))


def measure_value(j: int, N: int, p: int, d: int, q) -> Fraction:
    """Mass ``q^j / [d p^N]_q`` of the cylinder ``j + d p^N Z_p``."""
    size = d * p**N
    if not 0 <= j < size:
        raise DomainError(f"j = {j} outside [0, {size})")
    q = as_rational(q)
    return q**j / q_bracket(size, q)


@dataclass(frozen=True)
class IntegrandSpec:
    """Integrand ``y -> chi(y) q^{b y} (x + a y)^n`` on ``X_d``."""

    n: int
    p: int
    q: int = 1
    x: int = 0
    a: int = 1
    b: int = 1
    d: int = 1
    chi: Optional[DirichletCharacter] = field(default=None, compare=False)

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise DomainError("p must be an odd prime")
        if self.n < 0 or self.a < 1 or self.b < 1 or self.d < 1:
            raise DomainError("n >= 0 and a, b, d >= 1 required")
        if gcd(self.d, self.p) != 1:
            raise DomainError(f"d = {self.d} must be prime to p = {self.p}")
        if (self.q - 1) % self.p:
            raise DomainError(f"q = {self.q} is not congruent to 1 mod {self.p}")
        if self.chi is not None:
            if not self.chi.is_real:
                raise DomainError("p-adic integrands take real characters only")
            if self.d % self.chi.conductor:
                raise DomainError("the domain X_d must have d divisible by the conductor")


def _level_sums(spec: IntegrandSpec, M: int):
    """Yield ``(N, residue)`` for N = 0, 1, 2, ...

    The level-N range ``[0, d p^N)`` is a prefix of every later level, so a
    single running sum serves all levels.
    """
    mod = spec.p**M
    qb = pow(spec.q, spec.b, mod)
    chi = spec.chi
    acc, weight, j, N = 0, 1, 0, 0  # weight = q^{b j} mod p^M
    while True:
        stop = spec.d * spec.p**N
        while j < stop:
            term = weight * pow(spec.x + spec.a * j, spec.n, mod)
            if chi is not None:
                term *= int(chi(j))
            acc = acc - term if j & 1 else acc + term
            weight = weight * qb % mod
            j += 1
        acc %= mod
        yield N, acc
        N += 1


def partial_sums(spec: IntegrandSpec, levels: Sequence[int], M: int) -> list[int]:
    """Residues of the level-N sums for each N in ``levels``."""
    wanted = set(levels)
    found = {}
    if wanted:
        for N, acc in _level_sums(spec, M):
            if N in wanted:
                found[N] = acc
            if N >= max(wanted):
                break
    return [found[N] for N in levels]


def fermionic_partial_sum(spec: IntegrandSpec, N: int, M: int) -> PadicResidue:
    """sum_{j < d p^N} (-1)^j chi(j) q^{b j} (x + a j)^n  mod p^M."""
    if N < 0:
        raise DomainError("level N must be non-negative")
    return PadicResidue(spec.p, M, partial_sums(spec, [N], M)[0])


@dataclass(frozen=True)
class StabilizedIntegral:
    residue: PadicResidue
    level: int

    def to_json(self) -> dict:
        return {**self.residue.to_json(), "level": self.level}


def stabilized_integral(spec: IntegrandSpec, M: int, N_max: int = 12) -> StabilizedIntegral:
    """The first level N >= 1 whose sum agrees with level N+1 mod p^M."""
    if N_max < 2:
        raise DomainError("N_max must be at least 2")
    prev = None
    for N, acc in _level_sums(spec, M):
        if N == 0:
            continue
        if prev is not None and prev == acc:
            return StabilizedIntegral(PadicResidue(spec.p, M, acc), N - 1)
        if N == N_max:
            raise NotStabilizedError(
                f"no stabilization mod {spec.p}^{M} by level {N_max}",
                last_residues=(prev, acc),
            )
        prev = acc
    raise AssertionError("unreachable")


# -- several variables ----------------------------------------------------------
#
# The r-fold integrand q^{sum b_j y_j} (x + sum a_j y_j)^n expands multinomially
# into products of one-variable moments  int q^{b_j y} y^k dmu_{-1}(y),  so the
# r-fold integral only needs r one-variable tables.


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in _compositions(n - k, parts - 1):
            yield (k,) + rest


def _combine(n: int, x: int, a: Sequence[int], moments: list[list[int]], mod: int) -> int:
    """sum over k_0 + k_1 + ... + k_r = n of multinomial * x^k_0 * prod a_j^k_j m_j[k_j]."""
    total = 0
    for ks in _compositions(n, len(a) + 1):
        coeff = factorial(n)
        for k in ks:
            coeff //= factorial(k)
        term = coeff * pow(x, ks[0], mod)
        for j, k in enumerate(ks[1:]):
            term = term * pow(a[j], k, mod) * moments[j][k] % mod
        total += term
    return total % mod


def factorized_partial_sum(
    n: int, x: int, a: Sequence[int], b: Sequence[int], q: int, p: int, N: int, M: int, d: int = 1
) -> PadicResidue:
    """Level-N r-fold sum assembled from one-variable level-N moment sums."""
    moments = [
        [partial_sums(IntegrandSpec(k, p, q, 0, 1, bj, d), [N], M)[0] for k in range(n + 1)]
        for bj in b
    ]
    return PadicResidue(p, M, _combine(n, x, a, moments, p**M))


def brute_force_double_sum(
    n: int, x: int, a: Sequence[int], b: Sequence[int], q: int, p: int, N: int, M: int, d: int = 1
) -> PadicResidue:
    """Direct double sum over [0, d p^N)^2; the oracle for the factorized route."""
    if len(a) != 2 or len(b) != 2:
        raise DomainError("the brute-force oracle is two-dimensional")
    mod = p**M
    size = d * p**N
    total = 0
    for j in range(size):
        for k in range(size):
            sign = -1 if (j + k) & 1 else 1
            total += sign * pow(q, b[0] * j + b[1] * k, mod) * pow(x + a[0] * j + a[1] * k, n, mod)
    return PadicResidue(p, M, total)


@dataclass(frozen=True)
class MultivariateIntegral:
    residue: PadicResidue
    levels: tuple[int, ...]

    def to_json(self) -> dict:
        return {**self.residue.to_json(), "levels": list(self.levels)}


def multivariate_integral(
    n: int, x: int, a: Sequence[int], b: Sequence[int], q: int, p: int, M: int,
    N_max: int = 12, d: int = 1,
) -> MultivariateIntegral:
    """r-fold integral from stabilized one-variable moments.

    ``levels`` lists the stabilization level of every one-variable moment used.
    """
    if len(a) != len(b) or not a:
        raise DomainError("a and b must be non-empty and of equal length")
    moments, levels = [], []
    for bj in b:
        row = []
        for k in range(n + 1):
            s = stabilized_integral(IntegrandSpec(k, p, q, 0, 1, bj, d), M, N_max)
            row.append(s.residue.value)
            levels.append(s.level)
        moments.append(row)
    return MultivariateIntegral(PadicResidue(p, M, _combine(n, x, a, moments, p**M)), tuple(levels))
