"""Verifiers for the character-twisted identities."""

from __future__ import annotations

import logging
from fractions import Fraction

from eulercert.arith.integers import totient
from eulercert.arith.polynomial import RationalPolynomial, interpolation_points
from eulercert.arith.series import series_coeff_factorial
from eulercert.dirichlet.characters import (
    DirichletCharacter,
    is_primitive,
    is_principal,
)
from eulercert.exceptions import PreconditionError
from eulercert.identities.certificate import IdentityCertificate, make_certificate, verifier
from eulercert.twisted.polynomials import (
    gen_euler_poly,
    gen_genocchi_poly,
    require_even_modulus,
)
from eulercert.twisted.power_sums import twisted_power_sum
from eulercert.twisted.series import twisted_euler_series, twisted_genocchi_series

logger = logging.getLogger(__name__)


def _character_extra(chi: DirichletCharacter) -> dict:
    return {"principal": is_principal(chi), "primitive": is_primitive(chi)}


@verifier("theorem4")
def verify_theorem4(chi: DirichletCharacter, n: int, *, params: dict | None = None) -> IdentityCertificate:
    """Check the twisted Genocchi closed form three ways.

    * ``genocchi_series`` / ``euler_series``: closed forms of G_{n,χ} and
      E_{n,χ} against the generating-function coefficients at the
      ``n + 1`` sample points ``0, 1/2, 1, ...``;
    * ``g0``: G_{0,χ}(x) against zero for non-principal χ and against
      ``2·φ(d)/d`` for the principal character (``g0_vanishes``);
    * ``genocchi_euler``: ``(n+1)·E_{n,χ}(x)`` against ``G_{n+1,χ}(x)``.
    """
    d = require_even_modulus(chi)
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")

    points = interpolation_points(n + 1)
    g = gen_genocchi_poly(n, chi)
    e = gen_euler_poly(n, chi)
    g_series = [series_coeff_factorial(twisted_genocchi_series(chi, x, n + 1), n) for x in points]
    e_series = [series_coeff_factorial(twisted_euler_series(chi, x, n + 1), n) for x in points]

    g0 = gen_genocchi_poly(0, chi).poly
    if is_principal(chi):
        g0_expected = RationalPolynomial.constant(Fraction(2 * totient(d), d))
    else:
        g0_expected = RationalPolynomial.zero()

    lhs = {
        "genocchi_series": [g(x) for x in points],
        "euler_series": [e(x) for x in points],
        "g0": g0,
        "genocchi_euler": e.poly * (n + 1),
    }
    rhs = {
        "genocchi_series": g_series,
        "euler_series": e_series,
        "g0": g0_expected,
        "genocchi_euler": gen_genocchi_poly(n + 1, chi).poly,
    }
    extra = _character_extra(chi)
    extra["sample_points"] = points
    extra["g0_vanishes"] = g0.is_zero()
    return make_certificate("theorem4", params, lhs, rhs, extra)


@verifier("eq17")
def verify_eq17(
    chi: DirichletCharacter, n: int, k: int, *, params: dict | None = None
) -> IdentityCertificate:
    """``E_{k,χ}(d·n) - E_{k,χ}(0) = 2·T_{k,χ}(d·n - 1)``."""
    d = require_even_modulus(chi)
    if n < 1:
        raise PreconditionError(f"shift multiple must be >= 1, got {n}")
    if k < 0:
        raise PreconditionError(f"degree must be >= 0, got {k}")
    e = gen_euler_poly(k, chi)
    lhs = e(d * n) - e(0)
    rhs = twisted_power_sum(k, chi, d * n - 1) * 2
    return make_certificate("eq17", params, lhs, rhs, _character_extra(chi))
