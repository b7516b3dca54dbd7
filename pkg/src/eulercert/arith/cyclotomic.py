"""Exact arithmetic in cyclotomic fields Q(ζ_m).

A :class:`CyclotomicNumber` stores ``Σ coeffs[i]·ζ_m^i`` with exactly
``φ(m)`` rational coefficients, reduced modulo the m-th cyclotomic
polynomial on construction. Operands of different orders are embedded
into Q(ζ_lcm) before combining, so equality is always a coefficient
comparison.

Dense polynomials inside this module are plain lists of coefficients,
lowest degree first.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from eulercert.arith.integers import divisors, mobius, totient
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Dense polynomial helpers over Q
# ---------------------------------------------------------------------------

def _trim(coeffs: list) -> list:
    """Drop trailing zero coefficients in place and return the list."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Long division of dense polynomials over Q; *den* must be nonzero."""
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in num]
    _trim(rem)
    if len(rem) < len(den):
        return [], rem
    quot = [Fraction(0)] * (len(rem) - len(den) + 1)
    lead = Fraction(den[-1])
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(den) - 1] / lead
        quot[shift] = c
        if c:
            for j, dc in enumerate(den):
                rem[shift + j] -= c * dc
    return _trim(quot), _trim(rem[: len(den) - 1])


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    """Integer coefficients of Φ_m, lowest degree first.

    Computed as ``(x^m - 1) / Π_{d | m, d < m} Φ_d`` by exact division.
    ``lru_cache`` makes concurrent first calls recompute the same value,
    which is harmless.
    """
    if m < 1:
        raise PreconditionError(f"cyclotomic order must be >= 1, got {m}")
    numerator: list = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in divisors(m):
        if d == m:
            continue
        numerator, remainder = _poly_divmod(numerator, list(cyclotomic_coeffs(d)))
        if remainder:
            raise ArithmeticError(f"Φ_{d} does not divide x^{m} - 1")
    coeffs = tuple(int(c) for c in numerator)
    logger.debug("Φ_%d has degree %d", m, len(coeffs) - 1)
    return coeffs


def _reduce(coeffs, m: int) -> tuple[Fraction, ...]:
    """Reduce a representative polynomial modulo Φ_m to exactly φ(m) coefficients."""
    phi = cyclotomic_coeffs(m)
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    if len(work) < deg:
        work.extend([Fraction(0)] * (deg - len(work)))
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    work[base + j] -= c * phi[j]
            work[i] = Fraction(0)
    return tuple(work[:deg])


# ---------------------------------------------------------------------------
# CyclotomicNumber
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CyclotomicNumber:
    """An element of Q(ζ_order) in the power basis 1, ζ, ..., ζ^(φ(order)-1)."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise PreconditionError(f"cyclotomic order must be >= 1, got {self.order}")
        object.__setattr__(self, "coeffs", _reduce(self.coeffs, self.order))

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, value: int | Fraction, order: int = 1) -> CyclotomicNumber:
        """Embed a rational number into Q(ζ_order)."""
        return cls(order, (Fraction(value),))

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1) -> CyclotomicNumber:
        """Return ζ_order^k."""
        k %= order
        return cls(order, (Fraction(0),) * k + (Fraction(1),))

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        """Return the rational value; raises ``ValueError`` when irrational."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- embeddings --------------------------------------------------------

    def embed(self, order: int) -> CyclotomicNumber:
        """Re-express this number in Q(ζ_order); *order* must be a multiple."""
        if order == self.order:
            return self
        if order % self.order:
            raise PreconditionError(
                f"cannot embed Q(ζ_{self.order}) into Q(ζ_{order})"
            )
        step = order // self.order
        spread = [Fraction(0)] * (step * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            spread[i * step] = c
        return CyclotomicNumber(order, tuple(spread))

    def _align(self, other: CyclotomicNumber) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        common = self.order * other.order // math.gcd(self.order, other.order)
        return self.embed(common), other.embed(common)

    def _normalized_trace(self) -> Fraction:
        # Tr(z)/φ(m) is unchanged by embedding, so it is a valid hash key.
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                sub = self.order // math.gcd(i, self.order)
                total += c * Fraction(mobius(sub), totient(sub))
        return total

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            return CyclotomicNumber(self.order, (self.coeffs[0] + other,) + self.coeffs[1:])
        if isinstance(other, CyclotomicNumber):
            a, b = self._align(other)
            return CyclotomicNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, tuple(c * other for c in self.coeffs))
        if isinstance(other, CyclotomicNumber):
            if other.is_rational() and self.order % other.order == 0:
                return self * other.coeffs[0]
            if self.is_rational() and other.order % self.order == 0:
                return other * self.coeffs[0]
            return self._mul_full(other)
        return NotImplemented

    __rmul__ = __mul__

    def _mul_full(self, other: CyclotomicNumber) -> CyclotomicNumber:
        a, b = self._align(other)
        return CyclotomicNumber(a.order, tuple(_poly_mul(list(a.coeffs), list(b.coeffs))))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a cyclotomic number by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, CyclotomicNumber):
            return self * cyc_invert(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return cyc_invert(self) * other
        return NotImplemented

    def __pow__(self, exponent: int) -> CyclotomicNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else cyc_invert(self)
        k = abs(exponent)
        result = CyclotomicNumber.rational(1, self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            a, b = self._align(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(("cyclotomic", self._normalized_trace()))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"CyclotomicNumber({self.order}, [{body}])"


def cyc_invert(z: CyclotomicNumber) -> CyclotomicNumber:
    """Multiplicative inverse in Q(ζ_m) via the extended gcd with Φ_m.

    Raises:
        ZeroDivisionError: if *z* is zero.
    """
    if z.is_zero():
        raise ZeroDivisionError("cyclotomic number zero has no inverse")
    if z.is_rational():
        return CyclotomicNumber.rational(1 / z.coeffs[0], z.order)

    # Invariant: s_i · z ≡ r_i (mod Φ_m).
    r0: list = [Fraction(c) for c in cyclotomic_coeffs(z.order)]
    r1: list = _trim(list(z.coeffs))
    s0: list = []
    s1: list = [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        qs = _poly_mul(q, s1)
        width = max(len(s0), len(qs))
        s_next = [
            (s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)
            for i in range(width)
        ]
        r0, r1 = r1, r
        s0, s1 = s1, _trim(s_next)
    if len(r0) != 1:
        raise ArithmeticError(f"Φ_{z.order} shares a factor with {z!r}")
    g = r0[0]
    return CyclotomicNumber(z.order, tuple(c / g for c in s0))
