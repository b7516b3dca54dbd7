"""The symmetric series K(χ; w1, w2 | x) and the symmetry identity built on it.

K is taken in its manifestly symmetric closed form

    2(e^{d·w1·w2·t} - 1) / ((e^{d·w1·t} - 1)(e^{d·w2·t} - 1))
        · Σ_a (-1)^{a-1}χ(a)e^{w1·a·t} · Σ_b (-1)^{b-1}χ(b)e^{w2·b·t}
        · e^{w1·w2·x·t}

so swapping w1 and w2 permutes the factors. Expanding the first
character sum against ``e^{d·w1·t} - 1`` gives the generalized Euler
values, the second against the geometric ratio gives T_{k,χ}(d·w1 - 1);
the coefficient of ``t^N/N!`` is therefore twice the sum that the
verifier compares on both sides.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from eulercert.arith.polynomial import Scalar
from eulercert.arith.rational import alternating_sign, binomial
from eulercert.arith.series import (
    TruncatedSeries,
    series_coeff_factorial,
    series_div_cancel,
    series_exp_linear,
)
from eulercert.classical.bernoulli import bernoulli_poly
from eulercert.dirichlet.characters import DirichletCharacter, is_principal
from eulercert.exceptions import PreconditionError
from eulercert.identities.certificate import IdentityCertificate, make_certificate, verifier
from eulercert.twisted.polynomials import require_even_modulus
from eulercert.twisted.power_sums import twisted_power_sum
from eulercert.twisted.series import character_exp_sum

logger = logging.getLogger(__name__)


def _require_weights(w1: int, w2: int) -> None:
    if w1 < 1 or w2 < 1:
        raise PreconditionError(f"weights must be positive integers, got w1={w1}, w2={w2}")


def build_K(chi: DirichletCharacter, w1: int, w2: int, x, omega: int) -> TruncatedSeries:
    """K(χ; w1, w2 | x) to order *omega*.

    Inputs are built at ``omega + 2``; the denominator vanishes to order 2
    and is cancelled.

    Raises:
        PreconditionError: odd modulus, non-positive weights or ``omega < 1``.
        NonCancellingPoleError: for the principal character, whose
            character sums do not vanish at ``t = 0``.
    """
    d = require_even_modulus(chi)
    _require_weights(w1, w2)
    if omega < 1:
        raise PreconditionError(f"series order must be >= 1, got {omega}")
    order = omega + 2
    x = Fraction(x)

    num = (series_exp_linear(d * w1 * w2, order) - 1) * 2
    num = num * character_exp_sum(chi, w1, order) * character_exp_sum(chi, w2, order)
    num = num * series_exp_linear(w1 * w2 * x, order)
    den = (series_exp_linear(d * w1, order) - 1) * (series_exp_linear(d * w2, order) - 1)
    return series_div_cancel(num, den).truncate(omega)


@verifier("symmetry")
def verify_k_symmetry(
    chi: DirichletCharacter, w1: int, w2: int, x, omega: int, *, params: dict | None = None
) -> IdentityCertificate:
    """Coefficient-for-coefficient equality of K under ``w1 <-> w2``."""
    lhs = list(build_K(chi, w1, w2, x, omega).coeffs)
    rhs = list(build_K(chi, w2, w1, x, omega).coeffs)
    return make_certificate("symmetry", params, lhs, rhs)


def theorem5_side(chi: DirichletCharacter, w1: int, w2: int, degree: int, x) -> Scalar:
    """One side of the symmetry identity, with outer degree N and inner index a.

    ``Σ_{i=0}^{N} C(N,i)·(d^i/(i+1))·Σ_{a=0}^{d-1} (-1)^{a-1}χ(a)·B_{i+1}((a + w2·x)/d)
    · T_{N-i,χ}(d·w1 - 1)·w1^i·w2^{N-i}``
    """
    d = chi.modulus
    shift = w2 * Fraction(x)
    total = None
    for i in range(degree + 1):
        b = bernoulli_poly(i + 1)
        inner = sum(
            (chi.values[a] * (alternating_sign(a) * b((a + shift) / d)) for a in range(d) if chi.values[a]),
            Fraction(0),
        )
        term = inner * (binomial(degree, i) * Fraction(d**i, i + 1) * w1**i * w2 ** (degree - i))
        term = term * twisted_power_sum(degree - i, chi, d * w1 - 1)
        total = term if total is None else total + term
    return total


@verifier("theorem5")
def verify_theorem5(
    chi: DirichletCharacter, w1: int, w2: int, degree: int, x, *, params: dict | None = None
) -> IdentityCertificate:
    """Three-way check of the symmetry identity at degree N.

    ``mirrored`` compares the printed side with the ``w1 <-> w2`` side;
    ``k_reference`` compares the printed side with ``N!·[t^N]K/2``. The
    reference is absent (and recorded as ``None``) for the principal
    character, where K has a pole.
    """
    require_even_modulus(chi)
    _require_weights(w1, w2)
    if degree < 0:
        raise PreconditionError(f"degree must be >= 0, got {degree}")
    left = theorem5_side(chi, w1, w2, degree, x)
    right = theorem5_side(chi, w2, w1, degree, x)
    lhs = {"mirrored": left}
    rhs = {"mirrored": right}

    reference = None
    if not is_principal(chi):
        k_series = build_K(chi, w1, w2, x, degree + 2)
        reference = series_coeff_factorial(k_series, degree) / 2
        lhs["k_reference"] = left
        rhs["k_reference"] = reference
    extra = {
        "k_reference": reference,
        "omega": degree + 2,
        "principal": is_principal(chi),
    }
    return make_certificate("theorem5", params, lhs, rhs, extra)
