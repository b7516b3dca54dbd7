"""Finite-level simulation of the fermionic p-adic invariant integral."""

from eulercert.fermionic.checks import (
    verify_convergence,
    verify_shift_equation,
    verify_twisted_partial_sum,
)
from eulercert.fermionic.partial_sums import (
    PartialSumSpec,
    padic_valuation,
    partial_sum,
    valuation_rows,
)

__all__ = [
    "PartialSumSpec",
    "padic_valuation",
    "partial_sum",
    "valuation_rows",
    "verify_convergence",
    "verify_shift_equation",
    "verify_twisted_partial_sum",
]
