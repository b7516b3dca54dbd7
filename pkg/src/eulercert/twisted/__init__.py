"""Character-twisted Euler and Genocchi polynomials and power sums."""

from eulercert.twisted.polynomials import (
    TwistedPolynomial,
    gen_euler_number,
    gen_euler_poly,
    gen_genocchi_number,
    gen_genocchi_poly,
)
from eulercert.twisted.power_sums import (
    TwistedPowerSum,
    alternating_power_sum,
    twisted_power_sum,
)
from eulercert.twisted.series import twisted_euler_series, twisted_genocchi_series

__all__ = [
    "TwistedPolynomial",
    "TwistedPowerSum",
    "alternating_power_sum",
    "gen_euler_number",
    "gen_euler_poly",
    "gen_genocchi_number",
    "gen_genocchi_poly",
    "twisted_euler_series",
    "twisted_genocchi_series",
    "twisted_power_sum",
]
