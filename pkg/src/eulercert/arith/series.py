"""Truncated formal power series with exact coefficients.

A :class:`TruncatedSeries` of order Ω represents ``Σ_{n<Ω} c_n t^n + O(t^Ω)``.
Coefficients are plain (not divided by n!): products are plain Cauchy
products and factorial scaling happens only in
:func:`series_coeff_factorial`. Every operation below states the order of
its result.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from eulercert.arith.cyclotomic import CyclotomicNumber, cyc_invert
from eulercert.arith.polynomial import Scalar
from eulercert.exceptions import (
    NonCancellingPoleError,
    PreconditionError,
    TruncationError,
)

logger = logging.getLogger(__name__)


def _scalar(value) -> Scalar:
    if isinstance(value, CyclotomicNumber):
        return value
    return Fraction(value)


def _invert(value: Scalar) -> Scalar:
    if isinstance(value, CyclotomicNumber):
        return cyc_invert(value)
    return 1 / value


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Power series known to order ``order`` (coefficients ``c_0 .. c_{order-1}``)."""

    order: int
    coeffs: tuple = ()

    def __post_init__(self) -> None:
        if self.order < 0:
            raise PreconditionError(f"series order must be >= 0, got {self.order}")
        coeffs = [_scalar(c) for c in self.coeffs[: self.order]]
        coeffs.extend([Fraction(0)] * (self.order - len(coeffs)))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # -- inspection --------------------------------------------------------

    def coefficient(self, n: int) -> Scalar:
        """Plain coefficient ``c_n``; raises :class:`TruncationError` past the order."""
        if not 0 <= n < self.order:
            raise TruncationError(
                f"coefficient {n} requested from a series of order {self.order}"
            )
        return self.coeffs[n]

    def leading_zeros(self) -> int:
        """Number of leading zero coefficients (``order`` when all are zero)."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return self.order

    def truncate(self, order: int) -> TruncatedSeries:
        """Result order: ``min(order, self.order)``."""
        return TruncatedSeries(min(order, self.order), self.coeffs)

    def shift_down(self, z: int) -> TruncatedSeries:
        """Divide by ``t^z`` assuming the first *z* coefficients vanish. Order: ``order - z``."""
        if any(c != 0 for c in self.coeffs[:z]):
            raise NonCancellingPoleError(f"series does not vanish to order {z}")
        return TruncatedSeries(self.order - z, self.coeffs[z:])

    def mul_t(self, k: int = 1) -> TruncatedSeries:
        """Multiply by ``t^k``. Order: ``order + k``."""
        return TruncatedSeries(self.order + k, (Fraction(0),) * k + self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        """Order: ``min`` of the operand orders (constants keep ``self.order``)."""
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            if self.order == 0:
                return self
            return TruncatedSeries(self.order, (self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, tuple(self.coeffs[n] + other.coeffs[n] for n in range(order))
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber, TruncatedSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Cauchy product. Order: ``min`` of the operand orders."""
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return TruncatedSeries(self.order, tuple(c * other for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out: list = [Fraction(0)] * order
        for i in range(order):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(order - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(order, tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        """Coefficient-wise equality up to the smaller of the two orders."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self.coeffs[n] == other.coeffs[n] for n in range(order))

    __hash__ = None


# ---------------------------------------------------------------------------
# Constructors and operations
# ---------------------------------------------------------------------------

def series_exp_linear(c, order: int) -> TruncatedSeries:
    """The series of ``e^{c·t}``: coefficients ``c^n / n!`` for ``n < order``.

    Examples::

        >>> series_exp_linear(2, 3).coeffs
        (Fraction(1, 1), Fraction(2, 1), Fraction(2, 1))
    """
    if order < 1:
        raise PreconditionError(f"series order must be >= 1, got {order}")
    c = _scalar(c)
    coeffs: list = [Fraction(1)]
    for n in range(1, order):
        coeffs.append(coeffs[-1] * c / n)
    return TruncatedSeries(order, tuple(coeffs))


def series_polynomial(coeffs, order: int) -> TruncatedSeries:
    """A polynomial in t viewed as a series of the given order."""
    return TruncatedSeries(order, tuple(coeffs))


def series_div_cancel(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``num / den`` after cancelling a common factor ``t^z``.

    *z* is the number of leading zeros of *den*; *num* must vanish to at
    least the same order. Result order: ``min(order(num), order(den)) - z``.

    Raises:
        ZeroDivisionError: if *den* is identically zero to its order.
        NonCancellingPoleError: if *num* has fewer leading zeros than *den*.
        TruncationError: if *num* is known to order at most ``z``.
    """
    z = den.leading_zeros()
    if z >= den.order:
        raise ZeroDivisionError("series denominator vanishes to its full order")
    if num.order <= z:
        raise TruncationError(
            f"insufficient precision: numerator known to order {num.order}, "
            f"cancelling t^{z} leaves no coefficients"
        )
    zn = num.leading_zeros()
    if zn < z:
        raise NonCancellingPoleError(
            f"numerator vanishes to order {zn}, denominator to order {z}"
        )
    order = min(num.order, den.order) - z
    n_coeffs = num.coeffs[z : z + order]
    d_coeffs = den.coeffs[z : z + order]
    inv_lead = _invert(d_coeffs[0])

    quotient: list = []
    for n in range(order):
        acc = n_coeffs[n]
        for k in range(n):
            d = d_coeffs[n - k]
            if d != 0 and quotient[k] != 0:
                acc = acc - quotient[k] * d
        quotient.append(acc * inv_lead)
    logger.debug("series_div_cancel: cancelled t^%d, result order %d", z, order)
    return TruncatedSeries(order, tuple(quotient))


def series_coeff_factorial(s: TruncatedSeries, n: int) -> Scalar:
    """Return ``n!·c_n``, the exponential-generating-function coefficient.

    Raises:
        TruncationError: if ``n >= order(s)``.
    """
    return math.factorial(n) * s.coefficient(n)
