"""Alternating (twisted) power sums.

``T_{k,χ}(n) = Σ_{l=0}^{n} (-1)^{l-1}·χ(l)·l^k`` with ``0^0 = 1``.
The sign depends on l, not on the upper limit n.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from eulercert.arith.cyclotomic import CyclotomicNumber
from eulercert.arith.rational import alternating_sign
from eulercert.dirichlet.characters import DirichletCharacter
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistedPowerSum:
    k: int
    character: DirichletCharacter
    n: int
    value: CyclotomicNumber


def alternating_power_sum(k: int, n: int) -> Fraction:
    """``Σ_{l=0}^{n} (-1)^{l-1}·l^k``; empty (zero) for ``n < 0``."""
    return Fraction(sum(alternating_sign(l) * l**k for l in range(n + 1)))


def twisted_power_sum(k: int, chi: DirichletCharacter, n: int) -> CyclotomicNumber:
    """T_{k,χ}(n), evaluated exactly.

    Terms are grouped by residue modulo ``lcm(2, d)``, on which both the
    sign and χ are constant, so only one cyclotomic product is formed per
    residue class.

    Raises:
        PreconditionError: if ``k < 0``.
    """
    if k < 0:
        raise PreconditionError(f"exponent must be >= 0, got {k}")
    period = chi.modulus * 2 // math.gcd(chi.modulus, 2)
    total = CyclotomicNumber.rational(0, chi.order)
    for r in range(min(period, n + 1)):
        weight = chi.values[r % chi.modulus]
        if not weight:
            continue
        inner = sum(l**k for l in range(r, n + 1, period))
        total = total + weight * (alternating_sign(r) * inner)
    return total


def power_sum_record(k: int, chi: DirichletCharacter, n: int) -> TwistedPowerSum:
    return TwistedPowerSum(k, chi, n, twisted_power_sum(k, chi, n))
