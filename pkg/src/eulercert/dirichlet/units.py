"""Direct-product bases of the unit group (Z/dZ)^*.

The basis is deterministic: prime-power factors in ascending order, the
smallest primitive root for odd prime powers, ``3`` for modulus 4 and
``{-1, 5}`` for ``2^a`` with ``a >= 3``. Each local generator is lifted to
modulus d by the Chinese remainder theorem (≡ 1 on the other factors).
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from eulercert.arith.integers import factorize, multiplicative_order, totient
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitGroupBasis:
    """Generators of (Z/dZ)^* with their orders; ``Π orders = φ(d)``."""

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]


def primitive_root(q: int) -> int:
    """Smallest primitive root modulo an odd prime power *q*."""
    target = totient(q)
    for g in range(2, q):
        if math.gcd(g, q) == 1 and multiplicative_order(g, q) == target:
            return g
    raise PreconditionError(f"{q} has no primitive root")


def _local_basis(p: int, k: int) -> list[tuple[int, int]]:
    q = p**k
    if p == 2:
        if k == 1:
            return []
        if k == 2:
            return [(3, 2)]
        return [(q - 1, 2), (5, 2 ** (k - 2))]
    return [(primitive_root(q), totient(q))]


def _lift(g: int, q: int, d: int) -> int:
    """The residue mod d that is ≡ g (mod q) and ≡ 1 (mod d/q)."""
    rest = d // q
    if rest == 1:
        return g % d
    return (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % d


@lru_cache(maxsize=None)
def unit_group_basis(d: int) -> UnitGroupBasis:
    """Deterministic direct-product basis of (Z/dZ)^*.

    Examples::

        >>> unit_group_basis(8)
        UnitGroupBasis(modulus=8, generators=(7, 5), orders=(2, 2))
    """
    if d < 1:
        raise PreconditionError(f"modulus must be >= 1, got {d}")
    generators: list[int] = []
    orders: list[int] = []
    for p, k in factorize(d):
        q = p**k
        for g, order in _local_basis(p, k):
            generators.append(_lift(g, q, d))
            orders.append(order)
    logger.debug("unit group basis mod %d: generators=%s orders=%s", d, generators, orders)
    return UnitGroupBasis(d, tuple(generators), tuple(orders))


@lru_cache(maxsize=None)
def unit_log_table(d: int) -> dict[int, tuple[int, ...]]:
    """Map every unit mod d to its exponent vector on :func:`unit_group_basis`.

    Raises:
        ArithmeticError: if the basis does not generate φ(d) distinct units.
    """
    basis = unit_group_basis(d)
    table: dict[int, tuple[int, ...]] = {}
    for exponents in itertools.product(*(range(o) for o in basis.orders)):
        value = 1 % d
        for g, e in zip(basis.generators, exponents):
            value = value * pow(g, e, d) % d
        table[value] = exponents
    if len(table) != totient(d):
        raise ArithmeticError(
            f"basis {basis.generators} generates {len(table)} units mod {d}, "
            f"expected {totient(d)}"
        )
    return table


def discrete_log(d: int, unit: int) -> tuple[int, ...]:
    """Exponent vector of *unit* with respect to the basis mod *d*."""
    residue = unit % d
    if math.gcd(residue, d) != 1:
        raise PreconditionError(f"{unit} is not a unit modulo {d}")
    return unit_log_table(d)[residue]
