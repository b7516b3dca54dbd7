"""Dense univariate polynomials with exact scalars.

Coefficients are stored lowest degree first and are either
:class:`~fractions.Fraction` or
:class:`~eulercert.arith.cyclotomic.CyclotomicNumber`. The ``order`` field
records the scalar ring: 1 for Q, m for Q(ζ_m).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from eulercert.arith.cyclotomic import CyclotomicNumber, cyclotomic_coeffs

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, CyclotomicNumber]


def _scalar(value) -> Scalar:
    if isinstance(value, CyclotomicNumber):
        return value
    return Fraction(value)


def _scalar_order(value: Scalar) -> int:
    return value.order if isinstance(value, CyclotomicNumber) else 1


@dataclass(frozen=True, eq=False)
class RationalPolynomial:
    """Polynomial ``Σ coeffs[k]·x^k`` with trailing zeros stripped."""

    coeffs: tuple = ()
    order: int = 1

    def __post_init__(self) -> None:
        coeffs = [_scalar(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        order = self.order
        for c in coeffs:
            o = _scalar_order(c)
            order = order * o // math.gcd(order, o)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> RationalPolynomial:
        return cls(())

    @classmethod
    def constant(cls, value) -> RationalPolynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, k: int, coefficient=1) -> RationalPolynomial:
        """Return ``coefficient·x^k``."""
        return cls((0,) * k + (coefficient,))

    # -- inspection --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x) -> Scalar:
        """Evaluate by Horner's rule (so ``0^0 = 1`` for the constant term)."""
        result: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            if isinstance(other, (int, Fraction, CyclotomicNumber)):
                other = RationalPolynomial.constant(other)
            else:
                return NotImplemented
        width = max(len(self.coeffs), len(other.coeffs))
        summed = tuple(self.coefficient(k) + other.coefficient(k) for k in range(width))
        return RationalPolynomial(summed)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (RationalPolynomial, int, Fraction, CyclotomicNumber)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return RationalPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial.zero()
        out: list = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            inverse = 1 / Fraction(scalar)
            return RationalPolynomial(tuple(c * inverse for c in self.coeffs))
        if isinstance(scalar, CyclotomicNumber):
            return RationalPolynomial(tuple(c / scalar for c in self.coeffs))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = RationalPolynomial.constant(other)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)


def poly_compose_affine(p: RationalPolynomial, a, b) -> RationalPolynomial:
    """Return ``p(a + b·x)`` expanded exactly.

    Degree is preserved whenever ``b != 0``; with ``b = 0`` the result is
    the constant ``p(a)``.

    Examples::

        >>> poly_compose_affine(RationalPolynomial((0, 0, 1)), 1, 0)
        RationalPolynomial(coeffs=(Fraction(1, 1),), order=1)
    """
    inner = RationalPolynomial((a, b))
    result = RationalPolynomial.zero()
    for c in reversed(p.coeffs):
        result = result * inner + c
    return result


def poly_shift(p: RationalPolynomial, a) -> RationalPolynomial:
    """Return ``p(x + a)``."""
    return poly_compose_affine(p, a, 1)


def cyclotomic_polynomial(m: int) -> RationalPolynomial:
    """The m-th cyclotomic polynomial Φ_m, of degree φ(m).

    Examples::

        >>> cyclotomic_polynomial(12).coeffs
        (Fraction(1, 1), Fraction(0, 1), Fraction(-1, 1), Fraction(0, 1), Fraction(1, 1))
    """
    return RationalPolynomial(cyclotomic_coeffs(m))


def interpolation_points(count: int) -> list[Fraction]:
    """Return *count* distinct rational sample points ``0, 1/2, 1, 3/2, ...``.

    ``count`` points determine any polynomial of degree ``count - 1``.
    """
    return [Fraction(j, 2) for j in range(count)]

