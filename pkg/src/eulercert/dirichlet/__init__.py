"""Dirichlet characters of arbitrary modulus.

Exports::

    from eulercert.dirichlet import enumerate_characters, char_eval, conductor
"""

from eulercert.dirichlet.characters import (
    DirichletCharacter,
    char_eval,
    conductor,
    enumerate_characters,
    get_character,
    is_even,
    is_primitive,
    is_principal,
)
from eulercert.dirichlet.units import UnitGroupBasis, unit_group_basis

__all__ = [
    "DirichletCharacter",
    "UnitGroupBasis",
    "char_eval",
    "conductor",
    "enumerate_characters",
    "get_character",
    "is_even",
    "is_primitive",
    "is_principal",
    "unit_group_basis",
]
