"""Genocchi numbers and polynomials (``2t·e^{xt}/(e^t + 1)``).

The primary route is ``G_0 = 0`` and ``G_n(x) = n·E_{n-1}(x)``; the
series in :mod:`eulercert.classical.generating` is the independent check.
"""

from __future__ import annotations

from fractions import Fraction

from eulercert.arith.polynomial import RationalPolynomial
from eulercert.classical.euler import euler_number, euler_poly
from eulercert.exceptions import PreconditionError


def genocchi_number(n: int) -> Fraction:
    """G_n = G_n(0)."""
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    if n == 0:
        return Fraction(0)
    return n * euler_number(n - 1)


def genocchi_poly(n: int) -> RationalPolynomial:
    """G_n(x); the zero polynomial for n = 0."""
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    if n == 0:
        return RationalPolynomial.zero()
    return euler_poly(n - 1) * n
