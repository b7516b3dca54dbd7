"""Generating-function routes to the generalized Euler/Genocchi values.

* Genocchi:  ``2t·Σ_l (-1)^{l-1}χ(l)e^{lt}·e^{xt} / (e^{dt} - 1)``
* Euler:     ``2·Σ_l (-1)^{l-1}χ(l)e^{lt}·e^{xt} / (e^{dt} - 1)``

For even d the constant term of the character sum is ``Σ_l χ(l)``, which
vanishes unless χ is principal. The principal Euler quotient then has a
simple pole; :func:`twisted_euler_series` returns its regular part, taken
from the Genocchi series with the constant term dropped.
"""

from __future__ import annotations

import logging

from eulercert.arith.cyclotomic import CyclotomicNumber
from eulercert.arith.rational import alternating_sign
from eulercert.arith.series import TruncatedSeries, series_div_cancel, series_exp_linear
from eulercert.dirichlet.characters import DirichletCharacter, is_principal
from eulercert.twisted.polynomials import require_even_modulus

logger = logging.getLogger(__name__)


def character_exp_sum(chi: DirichletCharacter, w, order: int) -> TruncatedSeries:
    """``Σ_{l=0}^{d-1} (-1)^{l-1}·χ(l)·e^{w·l·t}`` to the given order."""
    total = TruncatedSeries(order, (CyclotomicNumber.rational(0, chi.order),))
    for l in range(chi.modulus):
        weight = chi.values[l]
        if not weight:
            continue
        total = total + series_exp_linear(w * l, order) * (weight * alternating_sign(l))
    return total


def twisted_genocchi_series(chi: DirichletCharacter, x, order: int) -> TruncatedSeries:
    """Genocchi generating function at rational *x*; result has the given order."""
    d = require_even_modulus(chi)
    num = (character_exp_sum(chi, 1, order + 1) * series_exp_linear(x, order + 1)) * 2
    den = series_exp_linear(d, order + 1) - 1
    return series_div_cancel(num.mul_t(), den)


def twisted_euler_series(chi: DirichletCharacter, x, order: int) -> TruncatedSeries:
    """Euler generating function (regular part) at rational *x*; result has the given order."""
    d = require_even_modulus(chi)
    if is_principal(chi):
        g = twisted_genocchi_series(chi, x, order + 1)
        logger.debug("principal character mod %d: using the regular part", d)
        return TruncatedSeries(order, g.coeffs[1:])
    num = (character_exp_sum(chi, 1, order + 1) * series_exp_linear(x, order + 1)) * 2
    den = series_exp_linear(d, order + 1) - 1
    return series_div_cancel(num, den)
