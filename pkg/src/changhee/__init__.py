"""Multivariate q-Euler numbers and polynomials computed by three independent routes.

* :mod:`changhee.qeuler` -- exact values from generating-function series division
* :mod:`changhee.padic` -- fermionic p-adic integrals as stabilizing sums mod p^M
* :mod:`changhee.analytic` -- complex r-fold alternating series (q-zeta, L-series)
"""

from .analytic import AnalyticParams, dirichlet_l, genfun_series, moment_series, zeta_r
from .characters import DirichletCharacter, character_from_table, quadratic_character
from .exact import TruncatedSeries, q_bracket, q_pochhammer
from .padic import IntegrandSpec, reduce_mod, stabilized_integral
from .qeuler import (
    QEulerSpec,
    distribution_identity_residual,
    generalized_q_euler_table,
    q_euler_polynomial_expand,
    q_euler_table,
)

__version__ = "0.1.0"
