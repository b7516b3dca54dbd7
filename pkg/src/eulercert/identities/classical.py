"""Verifiers for the classical (untwisted) identities.

Every check is exact: both sides are rationals or rational polynomials
and are compared with ``==``. ``d`` is always an even modulus.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from eulercert.arith.polynomial import RationalPolynomial, poly_compose_affine
from eulercert.arith.rational import alternating_sign
from eulercert.arith.series import series_coeff_factorial
from eulercert.classical.bernoulli import bernoulli_poly
from eulercert.classical.euler import euler_number, euler_poly
from eulercert.classical.generating import (
    SEQUENCE_KINDS,
    alternating_quotient,
    bernoulli_series,
    euler_series,
    genocchi_series,
    sequence_table,
)
from eulercert.classical.genocchi import genocchi_poly
from eulercert.exceptions import PreconditionError
from eulercert.identities.certificate import IdentityCertificate, make_certificate, verifier
from eulercert.twisted.power_sums import alternating_power_sum

logger = logging.getLogger(__name__)

# Oracle series are shared across a grid; cells below this degree reuse one.
_ORACLE_ORDER = 42


def _require_even(d: int) -> None:
    if d < 2 or d % 2:
        raise PreconditionError(f"modulus must be an even integer >= 2, got {d}")


def _require_degree(n: int) -> None:
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")


def bernoulli_moment_sum(d: int, n: int) -> Fraction:
    """``d^n/(n+1)·Σ_{l=0}^{d-1} (-1)^{l-1}·B_{n+1}(l/d)``."""
    b = bernoulli_poly(n + 1)
    total = sum(alternating_sign(l) * b(Fraction(l, d)) for l in range(d))
    return Fraction(d**n, n + 1) * total


def composed_bernoulli_sum(d: int, n: int) -> RationalPolynomial:
    """``Σ_{l=0}^{d-1} (-1)^{l-1}·B_n((l + x)/d)`` as a polynomial in x."""
    bn = bernoulli_poly(n)
    total = RationalPolynomial.zero()
    for l in range(d):
        total = total + poly_compose_affine(bn, Fraction(l, d), Fraction(1, d)) * alternating_sign(l)
    return total


@verifier("theorem1")
def verify_theorem1(d: int, n: int, *, params: dict | None = None) -> IdentityCertificate:
    """``E_n/2 = d^n/(n+1)·Σ_l (-1)^{l-1}·B_{n+1}(l/d)``."""
    _require_even(d)
    _require_degree(n)
    return make_certificate("theorem1", params, euler_number(n) / 2, bernoulli_moment_sum(d, n))


@verifier("theorem1")
def verify_theorem1_independence(
    n: int, moduli: tuple[int, ...], *, params: dict | None = None
) -> IdentityCertificate:
    """The Bernoulli moment sum takes the same value for every modulus in *moduli*."""
    _require_degree(n)
    if not moduli:
        raise PreconditionError("d-independence needs at least one modulus")
    for d in moduli:
        _require_even(d)
    values = [bernoulli_moment_sum(d, n) for d in moduli]
    params["moduli"] = list(moduli)
    params["check"] = "d_independence"
    return make_certificate("theorem1", params, values, [values[0]] * len(values))


@verifier("theorem2")
def verify_theorem2(d: int, n: int, *, params: dict | None = None) -> IdentityCertificate:
    """Alternating power sums as Bernoulli and Euler differences.

    * ``bernoulli_difference``: ``Σ_l (-1)^{l-1}(l/d)^n`` against
      ``(1/(n+1))·Σ_l (-1)^{l-1}(B_{n+1}(l/d + 1) - B_{n+1}(l/d))``;
    * ``euler_difference``: ``(E_n(d) - E_n)/2`` against
      ``Σ_l (-1)^{l-1}·l^n`` (with ``0^0 = 1``).
    """
    _require_even(d)
    _require_degree(n)
    b = bernoulli_poly(n + 1)
    powers = sum(alternating_sign(l) * Fraction(l, d) ** n for l in range(d))
    differences = sum(
        alternating_sign(l) * (b(Fraction(l, d) + 1) - b(Fraction(l, d))) for l in range(d)
    ) / (n + 1)
    lhs = {
        "bernoulli_difference": Fraction(powers),
        "euler_difference": (euler_poly(n)(d) - euler_number(n)) / 2,
    }
    rhs = {
        "bernoulli_difference": Fraction(differences),
        "euler_difference": alternating_power_sum(n, d - 1),
    }
    return make_certificate("theorem2", params, lhs, rhs)


@verifier("theorem3")
def verify_theorem3(d: int, n: int, *, params: dict | None = None) -> IdentityCertificate:
    """``G_n(x)/2 = d^{n-1}·Σ_l (-1)^{l-1}·B_n((l + x)/d)`` as polynomials."""
    _require_even(d)
    _require_degree(n)
    rhs = composed_bernoulli_sum(d, n) * Fraction(d) ** (n - 1)
    return make_certificate("theorem3", params, genocchi_poly(n) / 2, rhs)


@verifier("euler_poly")
def verify_euler_poly_bernoulli(d: int, n: int, *, params: dict | None = None) -> IdentityCertificate:
    """``E_n(x)/2 = d^n/(n+1)·Σ_l (-1)^{l-1}·B_{n+1}((l + x)/d)`` as polynomials."""
    _require_even(d)
    _require_degree(n)
    rhs = composed_bernoulli_sum(d, n + 1) * Fraction(d**n, n + 1)
    return make_certificate("euler_poly", params, euler_poly(n) / 2, rhs)


@verifier("eq5")
def verify_eq5(d: int, order: int, *, params: dict | None = None) -> IdentityCertificate:
    """The cancelled quotient ``2Σ_l (-1)^{l-1}e^{lt}/(e^{dt} - 1)`` equals ``2/(e^t + 1)``."""
    _require_even(d)
    if order < 1:
        raise PreconditionError(f"series order must be >= 1, got {order}")
    lhs = list(alternating_quotient(d, order).coeffs)
    rhs = list(euler_series(order).coeffs)
    return make_certificate("eq5", params, lhs, rhs)


@verifier("oracles")
def verify_oracles(n: int, *, params: dict | None = None) -> IdentityCertificate:
    """Recurrence values of B_n, E_n, G_n against their generating-function coefficients."""
    _require_degree(n)
    order = max(n + 2, _ORACLE_ORDER)
    series = {
        "bernoulli": bernoulli_series(order),
        "euler": euler_series(order),
        "genocchi": genocchi_series(order),
    }
    lhs = {kind: sequence_table(kind, n).values[n] for kind in SEQUENCE_KINDS}
    rhs = {kind: series_coeff_factorial(series[kind], n) for kind in SEQUENCE_KINDS}
    return make_certificate("oracles", params, lhs, rhs)
