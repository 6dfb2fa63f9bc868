"""Complex evaluation of r-fold alternating q-series with tail certificates.

Every series here has the shape

    2^r  sum_{n in N^r}  (-1)^{|n|} q^{b.n} w(n) g(a.n + x)

for ``|q| < 1``, where ``w`` is a product of character values (or 1) and ``g``
is an exponential, a power, or an inverse power.  Summation runs over the
weight shell ``b.n <= B``.  With ``w = b.n`` each discarded term obeys

    |term| <= C (w + 1)^P z^w

(at most ``(w+1)^(r-1)`` lattice points share a weight), and

    sum_{m >= M} m^P z^m  <=  z^M (M + P)^P / (1 - z)^(P + 1)

turns that into the reported truncation bound.  A floating-point rounding
allowance is added on top, so ``tail_bound`` bounds |computed - exact|.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .characters import DirichletCharacter
from .errors import DivergenceError, DomainError

__all__ = [
    "AnalyticParams",
    "SeriesValue",
    "TruncationCertificate",
    "default_eps",
    "dirichlet_l",
    "genfun_closed_form",
    "genfun_series",
    "moment_series",
    "truncation_plan",
    "zeta_r",
]

UNIT_ROUNDOFF = 2.0**-53
MAX_SHELL = 200_000


def default_eps() -> float:
    raw = os.environ.get("QEULER_EPS_DEFAULT")
    return float(raw) if raw else 1e-12


@dataclass(frozen=True)
class AnalyticParams:
    q: complex
    a: tuple[int, ...]
    b: tuple[int, ...]
    eps: float = 1e-12

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if not abs(self.q) < 1:
            raise DomainError(f"|q| = {abs(self.q)} must be < 1")
        if not self.a or len(self.a) != len(self.b):
            raise DomainError("a and b must be non-empty and of equal length")
        if any(not isinstance(v, int) or v < 1 for v in self.a + self.b):
            raise DomainError("all a_j and b_j must be positive integers")
        if not self.eps > 0:
            raise DomainError("eps must be positive")

    @property
    def r(self) -> int:
        return len(self.a)

    def with_eps(self, eps: float) -> AnalyticParams:
        return AnalyticParams(self.q, self.a, self.b, eps)


@dataclass(frozen=True)
class TruncationCertificate:
    shell: int
    cutoffs: tuple[int, ...]
    truncation_bound: float
    rounding_bound: float = 0.0
    terms: int = 0

    @property
    def tail_bound(self) -> float:
        return self.truncation_bound + self.rounding_bound


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    certificate: TruncationCertificate

    @property
    def tail_bound(self) -> float:
        return self.certificate.tail_bound

    def to_json(self) -> dict:
        c = self.certificate
        return {
            "value": [self.value.real, self.value.imag],
            "tail_bound": c.tail_bound,
            "truncation_bound": c.truncation_bound,
            "rounding_bound": c.rounding_bound,
            "terms": c.terms,
            "cutoffs": list(c.cutoffs),
            "shell": c.shell,
        }


# -- majorant and plan ------------------------------------------------------------


@dataclass(frozen=True)
class _Majorant:
    log_c: float  # log of the constant C; -inf when C = 0
    z: float
    P: int

    def log_tail(self, B: int) -> float:
        if self.z == 0.0 or self.log_c == -math.inf:
            return -math.inf
        return (
            self.log_c
            + (B + 1) * math.log(self.z)
            + self.P * math.log(B + 2 + self.P)
            - (self.P + 1) * math.log1p(-self.z)
        )

    def tail(self, B: int) -> float:
        lt = self.log_tail(B)
        return 0.0 if lt == -math.inf else math.exp(lt)


def _choose_shell(maj: _Majorant, eps: float) -> int:
    if eps <= 0:
        raise DomainError("eps must be positive")
    log_eps = math.log(eps)
    for B in range(MAX_SHELL):
        if maj.log_tail(B) <= log_eps:
            return B
    raise DivergenceError(f"no shell below {MAX_SHELL} reaches tolerance {eps}")


def _power_majorant(params: AnalyticParams, sigma: float, x: float, base_min: float) -> _Majorant:
    """Majorant for terms q^{b.n} (a.n + x)^{-s} with Re s = sigma."""
    r = params.r
    z = abs(params.q)
    log_c = r * math.log(2.0)
    if sigma >= 0:
        log_c -= sigma * math.log(base_min)
        K = 0
    else:
        growth = max(max(aj / bj for aj, bj in zip(params.a, params.b)), x)
        K = math.ceil(-sigma)
        log_c += -sigma * math.log(growth) if growth > 0 else 0.0
    return _Majorant(log_c, z, r - 1 + K)


def _certificate(
    params: AnalyticParams, maj: _Majorant, start: int, shell: Optional[int] = None
) -> TruncationCertificate:
    floor = start * sum(params.b)
    if shell is not None:
        B = shell
    elif maj.z == 0.0 or maj.log_c == -math.inf:
        B = floor
    else:
        B = max(_choose_shell(maj, params.eps), floor)
    total_b = sum(params.b)
    cutoffs = tuple(
        max((B - start * (total_b - bj)) // bj, 0) if B >= floor else 0 for bj in params.b
    )
    return TruncationCertificate(B, cutoffs, maj.tail(B), 0.0, _count(params.b, start, B))


def _power_setup(params: AnalyticParams, s: complex, x: float, character: bool):
    if character:
        x, base_min = 0.0, float(sum(params.a))
    else:
        base_min = x
    if s.real > 0 and base_min <= 0:
        raise DomainError("the shift x must be positive for Re s > 0")
    return _power_majorant(params, s.real, x, base_min), (1 if character else 0)


def truncation_plan(
    params: AnalyticParams,
    s,
    eps: Optional[float] = None,
    *,
    x: float = 1.0,
    character: bool = False,
) -> TruncationCertificate:
    """Shell and per-dimension cutoffs keeping the discarded tail under ``eps``.

    ``s`` is the complex exponent of ``(a.n + x)^{-s}``; pass ``-k`` for the
    k-th moment.  With ``character`` the indices start at 1 and ``x`` is 0.
    """
    if eps is not None:
        params = params.with_eps(eps)
    maj, start = _power_setup(params, complex(s), x, character)
    return _certificate(params, maj, start)


# -- lattice summation ------------------------------------------------------------


def _indices(b: Sequence[int], start: int, B: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic walk over n_j >= start with sum b_j n_j <= B."""
    r = len(b)
    floor_rest = [start * sum(b[j + 1:]) for j in range(r)]

    def walk(j: int, budget: int, prefix: tuple[int, ...]):
        if j == r:
            yield prefix
            return
        n = start
        while b[j] * n + floor_rest[j] <= budget:
            yield from walk(j + 1, budget - b[j] * n, prefix + (n,))
            n += 1

    yield from walk(0, B, ())


def _count(b: Sequence[int], start: int, B: int) -> int:
    return sum(1 for _ in _indices(b, start, B))


def _lattice_sum(
    params: AnalyticParams,
    cert: TruncationCertificate,
    start: int,
    g: Callable[[float], complex],
    x: float,
    chi: Optional[DirichletCharacter],
    per_term_ulps: float,
    ratios: Optional[Sequence[complex]] = None,
) -> SeriesValue:
    """Sum the shell; ``ratios`` replaces the per-dimension factors q^{b_j}."""
    r = params.r
    qb = list(ratios) if ratios is not None else [params.q**bj for bj in params.b]
    chi_vals = chi.complex_values() if chi is not None else None
    re_parts, im_parts = [], []
    abs_total = 0.0
    max_n = max(cert.cutoffs, default=0)
    qpow = [[qbj**n for n in range(max_n + 1)] for qbj in qb]
    for idx in _indices(params.b, start, cert.shell):
        weight = complex(2**r)
        for j, n in enumerate(idx):
            weight *= qpow[j][n]
            if chi_vals is not None:
                weight *= chi_vals[n % chi.conductor]
        if weight == 0:
            continue
        if sum(idx) & 1:
            weight = -weight
        base = x + sum(aj * n for aj, n in zip(params.a, idx))
        term = weight * g(base)
        re_parts.append(term.real)
        im_parts.append(term.imag)
        abs_total += abs(term)
    value = complex(math.fsum(re_parts), math.fsum(im_parts))
    ulps = per_term_ulps + 4 + 2 * r + 2 * math.log2(max_n + 2)
    rounding = UNIT_ROUNDOFF * (ulps * abs_total + 2 * abs(value))
    return SeriesValue(
        value,
        TruncationCertificate(cert.shell, cert.cutoffs, cert.truncation_bound, rounding, cert.terms),
    )


def _inverse_power(s: complex) -> tuple[Callable[[float], complex], float]:
    """``base -> base^{-s}`` (principal branch) and its per-term error in ulps."""
    if s.imag == 0 and s.real == int(s.real):
        k = int(-s.real)
        # 0^0 = 1 convention; k < 0 only meets positive bases
        return (lambda base: complex(float(base) ** k)), 2.0
    return (lambda base: cmath.exp(-s * math.log(base))), 4.0


# -- public series ----------------------------------------------------------------


def genfun_closed_form(t, params: AnalyticParams, x: float = 0.0) -> complex:
    """2^r e^{xt} / prod_j (q^{b_j} e^{a_j t} + 1)."""
    t = complex(t)
    den = complex(1)
    for aj, bj in zip(params.a, params.b):
        den *= params.q**bj * cmath.exp(aj * t) + 1
    return 2**params.r * cmath.exp(x * t) / den


def genfun_series(
    t, params: AnalyticParams, x: float = 0.0, *, shell: Optional[int] = None
) -> SeriesValue:
    """The generating function summed as 2^r sum (-1)^|n| q^{b.n} e^{(a.n + x) t}."""
    t = complex(t)
    ratios = [abs(params.q) ** bj * math.exp(aj * t.real) for aj, bj in zip(params.a, params.b)]
    if any(rho >= 1 for rho in ratios):
        raise DivergenceError(f"|q^b e^(a Re t)| >= 1 for t = {t}; the series diverges")
    z = max(rho ** (1.0 / bj) for rho, bj in zip(ratios, params.b))
    log_c = params.r * math.log(2.0) + x * t.real
    cert = _certificate(params, _Majorant(log_c, z, params.r - 1), 0, shell)
    # e^{(a.n) t} is folded into per-dimension ratios q^{b_j} e^{a_j t} so that
    # neither factor overflows on its own
    ratios = [params.q**bj * cmath.exp(aj * t) for aj, bj in zip(params.a, params.b)]
    shift = cmath.exp(x * t)
    per_term = 4 + abs(t) * (x + max(params.a))
    return _lattice_sum(params, cert, 0, lambda base: shift, x, None, per_term, ratios)


def moment_series(
    k: int,
    x: float,
    params: AnalyticParams,
    chi: Optional[DirichletCharacter] = None,
    *,
    shell: Optional[int] = None,
) -> SeriesValue:
    """2^r sum (-1)^|n| q^{b.n} (a.n + x)^k, with 0^0 = 1.

    With a character the indices start at 1 and each term carries
    prod_j chi(n_j), which is the twisted moment series.
    """
    if k < 0 or int(k) != k:
        raise DomainError("k must be a non-negative integer")
    if x < 0:
        raise DomainError("x must be non-negative")
    start = 1 if chi is not None else 0
    maj = _power_majorant(params, -float(k), x, max(x, 1.0))
    cert = _certificate(params, maj, start, shell)
    g, ulps = _inverse_power(complex(-k))
    return _lattice_sum(params, cert, start, g, float(x), chi, ulps)


def zeta_r(s, x: float, params: AnalyticParams, *, shell: Optional[int] = None) -> SeriesValue:
    """2^r sum_{n >= 0} (-1)^|n| q^{b.n} (a.n + x)^{-s}."""
    if not x > 0:
        raise DomainError("zeta_r needs x > 0")
    s = complex(s)
    maj, start = _power_setup(params, s, x, False)
    cert = _certificate(params, maj, start, shell)
    g, ulps = _inverse_power(s)
    return _lattice_sum(params, cert, 0, g, float(x), None, ulps + abs(s) * _log_span(params, cert, x))


def dirichlet_l(
    s, chi: DirichletCharacter, params: AnalyticParams, *, shell: Optional[int] = None
) -> SeriesValue:
    """2^r sum_{n >= 1} (-1)^|n| q^{b.n} prod chi(n_j) (a.n)^{-s}."""
    s = complex(s)
    maj, start = _power_setup(params, s, 0.0, True)
    cert = _certificate(params, maj, start, shell)
    g, ulps = _inverse_power(s)
    return _lattice_sum(params, cert, 1, g, 0.0, chi, ulps + abs(s) * _log_span(params, cert, 0.0))


def _log_span(params: AnalyticParams, cert: TruncationCertificate, x: float) -> float:
    top = x + sum(aj * c for aj, c in zip(params.a, cert.cutoffs))
    return 1.0 + math.log(max(top, 1.0))
