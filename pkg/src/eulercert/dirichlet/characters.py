"""Dirichlet characters: enumeration, evaluation and conductors.

Characters mod d are indexed by their exponent vectors over
:func:`~eulercert.dirichlet.units.unit_group_basis`, enumerated in
lexicographic order, so ``(modulus, index)`` addresses the same character
on every run. Values live in Q(ζ_m) with m the lcm of the basis orders.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

from eulercert.arith.codec import decode_scalar, encode_scalar
from eulercert.arith.cyclotomic import CyclotomicNumber
from eulercert.arith.integers import divisors, lcm_all
from eulercert.arith.rational import alternating_sign
from eulercert.dirichlet.units import unit_group_basis, unit_log_table
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod ``modulus`` with its full value table.

    Equality and hashing cover ``(modulus, index, exponents, order, values)``;
    the conductor is derived data.
    """

    modulus: int
    index: int
    exponents: tuple[int, ...]
    order: int
    values: tuple[CyclotomicNumber, ...] = field(repr=False)
    conductor: int = field(compare=False, default=1)

    def __call__(self, n: int) -> CyclotomicNumber:
        return self.values[n % self.modulus]


def _value_table(d: int, exponents: tuple[int, ...], m: int) -> tuple[CyclotomicNumber, ...]:
    basis = unit_group_basis(d)
    logs = unit_log_table(d)
    zero = CyclotomicNumber.rational(0, m)
    values = []
    for u in range(d):
        if math.gcd(u, d) != 1:
            values.append(zero)
            continue
        r = sum(e * k * (m // o) for e, k, o in zip(exponents, logs[u], basis.orders))
        values.append(CyclotomicNumber.root_of_unity(m, r))
    return tuple(values)


def _kernel_conductor(d: int, values: tuple[CyclotomicNumber, ...]) -> int:
    for f in divisors(d):
        if all(
            values[a] == 1
            for a in range(d)
            if math.gcd(a, d) == 1 and a % f == 1 % f
        ):
            return f
    return d


@lru_cache(maxsize=None)
def enumerate_characters(d: int) -> tuple[DirichletCharacter, ...]:
    """All φ(d) characters mod *d*, in exponent-vector order.

    Index 0 is always the principal character.
    """
    if d < 1:
        raise PreconditionError(f"modulus must be >= 1, got {d}")
    basis = unit_group_basis(d)
    m = lcm_all(basis.orders)
    characters = []
    for index, exponents in enumerate(itertools.product(*(range(o) for o in basis.orders))):
        values = _value_table(d, exponents, m)
        characters.append(
            DirichletCharacter(
                modulus=d,
                index=index,
                exponents=tuple(exponents),
                order=m,
                values=values,
                conductor=_kernel_conductor(d, values),
            )
        )
    logger.debug("enumerated %d characters mod %d (values in Q(ζ_%d))", len(characters), d, m)
    return tuple(characters)


def get_character(d: int, index: int) -> DirichletCharacter:
    """The character mod *d* at enumeration position *index*."""
    chars = enumerate_characters(d)
    if not 0 <= index < len(chars):
        raise PreconditionError(
            f"character index {index} out of range: modulus {d} has {len(chars)} characters"
        )
    return chars[index]


def char_eval(chi: DirichletCharacter, n: int) -> CyclotomicNumber:
    """χ(n), extended to all integers by periodicity; zero off the units."""
    return chi.values[n % chi.modulus]


def conductor(chi: DirichletCharacter) -> int:
    """Smallest f | d with χ(a) = 1 for every unit a ≡ 1 (mod f)."""
    return _kernel_conductor(chi.modulus, chi.values)


def is_principal(chi: DirichletCharacter) -> bool:
    return not any(chi.exponents)


def is_primitive(chi: DirichletCharacter) -> bool:
    return chi.conductor == chi.modulus


def is_even(chi: DirichletCharacter) -> bool:
    """Parity: True when χ(-1) = 1."""
    return char_eval(chi, -1) == 1


def character_sum(chi: DirichletCharacter) -> CyclotomicNumber:
    """Σ_{l mod d} χ(l): φ(d) for the principal character, 0 otherwise."""
    return sum(chi.values, CyclotomicNumber.rational(0, chi.order))


def alternating_character_sum(chi: DirichletCharacter) -> CyclotomicNumber:
    """Σ_{l=0}^{d-1} (-1)^{l-1}·χ(l), the constant term of the twisted numerators."""
    total = CyclotomicNumber.rational(0, chi.order)
    for l, value in enumerate(chi.values):
        if value:
            total = total + value * alternating_sign(l)
    return total


def character_to_dict(chi: DirichletCharacter) -> dict:
    return {
        "modulus": chi.modulus,
        "index": chi.index,
        "conductor": chi.conductor,
        "values": [encode_scalar(v) for v in chi.values],
    }


def character_from_dict(data: dict) -> DirichletCharacter:
    """Re-resolve a serialized character and check its value table.

    Raises:
        PreconditionError: if the stored values disagree with enumeration.
    """
    chi = get_character(int(data["modulus"]), int(data["index"]))
    stored = [decode_scalar(v) for v in data["values"]]
    if len(stored) != chi.modulus or any(a != b for a, b in zip(stored, chi.values)):
        raise PreconditionError(
            f"stored values do not match character {chi.index} mod {chi.modulus}"
        )
    return chi
