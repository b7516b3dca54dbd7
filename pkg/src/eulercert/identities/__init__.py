"""Exact verifiers returning :class:`IdentityCertificate` records.

The grid runner lives in :mod:`eulercert.identities.grids` and is imported
explicitly, since it also pulls in the fermionic checks.
"""

from eulercert.identities.certificate import (
    IdentityCertificate,
    certificate_to_dict,
    make_certificate,
)
from eulercert.identities.characters import verify_eq17, verify_theorem4
from eulercert.identities.classical import (
    verify_eq5,
    verify_euler_poly_bernoulli,
    verify_oracles,
    verify_theorem1,
    verify_theorem1_independence,
    verify_theorem2,
    verify_theorem3,
)
from eulercert.identities.symmetry import build_K, verify_k_symmetry, verify_theorem5

__all__ = [
    "IdentityCertificate",
    "build_K",
    "certificate_to_dict",
    "make_certificate",
    "verify_eq17",
    "verify_eq5",
    "verify_euler_poly_bernoulli",
    "verify_k_symmetry",
    "verify_oracles",
    "verify_theorem1",
    "verify_theorem1_independence",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem4",
    "verify_theorem5",
]
