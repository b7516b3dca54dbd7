"""Finite-level Riemann sums for the fermionic p-adic integral.

At level N the integral of f over Z_p is approximated by
``Σ_{0 <= j < p^N} (-1)^j·f(j)``; for a character of modulus d the
domain is X = lim Z/(d·p^N)Z and the sum runs over ``0 <= j < d·p^N``.
Only monomial integrands are supported, so every sum is an exact integer
or cyclotomic integer.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from eulercert.arith.cyclotomic import CyclotomicNumber
from eulercert.arith.integers import is_prime
from eulercert.classical.euler import euler_number, euler_poly
from eulercert.dirichlet.characters import DirichletCharacter
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)


def require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")


@dataclass(frozen=True)
class PartialSumSpec:
    """Integrand ``x^degree`` (times χ when given) at level ``level`` over prime ``p``."""

    p: int
    level: int
    degree: int
    character: DirichletCharacter | None = None

    def __post_init__(self) -> None:
        require_odd_prime(self.p)
        if self.level < 1:
            raise PreconditionError(f"level must be >= 1, got {self.level}")
        if self.degree < 0:
            raise PreconditionError(f"degree must be >= 0, got {self.degree}")

    @property
    def length(self) -> int:
        """Number of terms: ``p^N``, or ``d·p^N`` with a character."""
        base = self.p**self.level
        if self.character is None:
            return base
        return self.character.modulus * base


def partial_sum(spec: PartialSumSpec) -> Fraction | CyclotomicNumber:
    """``Σ_j (-1)^j·χ(j)·j^n`` over the level's range, exactly (``0^0 = 1``)."""
    n = spec.degree
    length = spec.length
    chi = spec.character
    if chi is None:
        total = sum(j**n if j % 2 == 0 else -(j**n) for j in range(length))
        return Fraction(total)

    # Group by residue mod lcm(2, d): (-1)^j and χ(j) are constant on each class.
    period = chi.modulus * 2 // math.gcd(chi.modulus, 2)
    result = CyclotomicNumber.rational(0, chi.order)
    for r in range(period):
        weight = chi.values[r % chi.modulus]
        if not weight:
            continue
        inner = sum(j**n for j in range(r, length, period))
        result = result + weight * (inner if r % 2 == 0 else -inner)
    logger.debug("partial sum p=%d N=%d n=%d over %d terms", spec.p, spec.level, n, length)
    return result


def padic_valuation(q, p: int) -> int | float:
    """``v_p(q)``: exponent of *p* in the rational *q*; ``math.inf`` for zero.

    Raises:
        PreconditionError: if *p* is not prime.
    """
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    q = Fraction(q)
    if q == 0:
        return math.inf
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def valuation_rows(p: int, n: int, max_level: int) -> list[dict]:
    """One row per level: partial sum, E_n and ``v_p`` of their difference."""
    e_n = euler_number(n)
    rows = []
    for level in range(1, max_level + 1):
        s = partial_sum(PartialSumSpec(p, level, n))
        rows.append(
            {
                "p": p,
                "n": n,
                "N": level,
                "partial_sum": s,
                "euler": e_n,
                "valuation": padic_valuation(s - e_n, p),
            }
        )
    return rows


def closed_form_partial_sum(p: int, level: int, n: int) -> Fraction:
    """``(E_n(p^N) + E_n)/2``, the exact value of the untwisted partial sum."""
    return (euler_poly(n)(p**level) + euler_number(n)) / 2
