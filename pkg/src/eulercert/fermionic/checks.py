"""Certificates for the fermionic integral equations.

The integral of ``e^{xt}`` is ``2/(e^t + 1)``, so the integral of ``x^n``
is E_n and shifting the integrand by s gives E_n(s). The limit defining
the integral is never taken: finite levels are compared against E_n with
an exact closed form and a valuation bound.
"""

from __future__ import annotations

import logging
import math

from eulercert.arith.rational import alternating_sign
from eulercert.classical.euler import euler_number, euler_poly
from eulercert.dirichlet.characters import DirichletCharacter
from eulercert.exceptions import PreconditionError
from eulercert.fermionic.partial_sums import (
    PartialSumSpec,
    closed_form_partial_sum,
    padic_valuation,
    partial_sum,
    require_odd_prime,
)
from eulercert.identities.certificate import IdentityCertificate, make_certificate, verifier
from eulercert.twisted.polynomials import gen_euler_poly, require_even_modulus

logger = logging.getLogger(__name__)


@verifier("convergence")
def verify_convergence(
    p: int, n: int, max_level: int, *, params: dict | None = None
) -> IdentityCertificate:
    """Levels ``1 .. max_level`` of the Riemann sums of ``x^n``.

    * ``closed_form``: partial sum against ``(E_n(p^N) + E_n)/2``;
    * ``valuation_bound``: ``v_p(partial sum - E_n) >= N`` at every level.
    """
    require_odd_prime(p)
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    if max_level < 1:
        raise PreconditionError(f"max level must be >= 1, got {max_level}")

    e_n = euler_number(n)
    sums, closed, valuations = [], [], []
    for level in range(1, max_level + 1):
        s = partial_sum(PartialSumSpec(p, level, n))
        sums.append(s)
        closed.append(closed_form_partial_sum(p, level, n))
        valuations.append(padic_valuation(s - e_n, p))

    lhs = {
        "closed_form": sums,
        "valuation_bound": [v >= level for level, v in enumerate(valuations, start=1)],
    }
    rhs = {"closed_form": closed, "valuation_bound": [True] * max_level}
    extra = {"valuations": valuations, "euler": e_n}
    return make_certificate("convergence", params, lhs, rhs, extra)


@verifier("shift")
def verify_shift_equation(n_shift: int, k: int, *, params: dict | None = None) -> IdentityCertificate:
    """``E_k(s) + (-1)^{s-1}·E_k = 2·Σ_{l=0}^{s-1} (-1)^{s-1-l}·l^k`` for ``s = n_shift``.

    Odd shifts give the sum form of the integral equation, even shifts the
    difference form.
    """
    if n_shift < 1:
        raise PreconditionError(f"shift must be >= 1, got {n_shift}")
    if k < 0:
        raise PreconditionError(f"degree must be >= 0, got {k}")
    lhs = euler_poly(k)(n_shift) + alternating_sign(n_shift) * euler_number(k)
    rhs = 2 * sum(alternating_sign(n_shift - l) * l**k for l in range(n_shift))
    extra = {"form": "sum" if n_shift % 2 else "difference"}
    return make_certificate("shift", params, lhs, rhs, extra)


@verifier("twisted_fermionic")
def verify_twisted_partial_sum(
    chi: DirichletCharacter, p: int, n: int, level: int, *, params: dict | None = None
) -> IdentityCertificate:
    """``Σ_{0<=j<d·p^N} (-1)^j·χ(j)·j^n = (E_{n,χ}(0) - E_{n,χ}(d·p^N))/2``."""
    d = require_even_modulus(chi)
    require_odd_prime(p)
    if math.gcd(p, d) != 1:
        raise PreconditionError(f"p={p} must not divide the modulus {d}")
    lhs = partial_sum(PartialSumSpec(p, level, n, chi))
    e = gen_euler_poly(n, chi)
    rhs = (e(0) - e(d * p**level)) / 2
    return make_certificate("twisted_fermionic", params, lhs, rhs)
