"""Generalized Euler and Genocchi polynomials attached to a character.

The closed forms below use the Bernoulli expansion

    G_{n,χ}(x) = 2·d^{n-1}·Σ_{l=0}^{d-1} (-1)^{l-1}·χ(l)·B_n((l + x)/d)

and ``E_{n,χ}(x) = G_{n+1,χ}(x)/(n+1)``, with ``d`` the (even) modulus of
χ. The generating-function routes live in :mod:`eulercert.twisted.series`
and are used to verify these closed forms independently.

With the ``(-1)^{l-1}`` weights, E_{n,χ} is the negative of the more
common literature normalization; no sign is silently flipped here.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from eulercert.arith.cyclotomic import CyclotomicNumber
from eulercert.arith.polynomial import RationalPolynomial, Scalar, poly_compose_affine
from eulercert.arith.rational import alternating_sign
from eulercert.classical.bernoulli import bernoulli_poly
from eulercert.dirichlet.characters import DirichletCharacter
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistedPolynomial:
    """A degree-bounded polynomial over the character's cyclotomic ring."""

    degree: int
    character: DirichletCharacter
    poly: RationalPolynomial

    def __call__(self, x) -> Scalar:
        return self.poly(x)

    @property
    def coeffs(self) -> tuple:
        return self.poly.coeffs


def require_even_modulus(chi: DirichletCharacter) -> int:
    """Return the modulus of *chi*, rejecting odd moduli."""
    d = chi.modulus
    if d % 2:
        raise PreconditionError(f"character modulus must be even, got {d}")
    return d


@lru_cache(maxsize=None)
def _genocchi_closed_form(n: int, chi: DirichletCharacter) -> RationalPolynomial:
    d = chi.modulus
    bn = bernoulli_poly(n)
    total = RationalPolynomial.zero()
    for l in range(d):
        weight = chi.values[l]
        if not weight:
            continue
        composed = poly_compose_affine(bn, Fraction(l, d), Fraction(1, d))
        total = total + composed * (weight * alternating_sign(l))
    return total * (2 * Fraction(d) ** (n - 1))


def gen_genocchi_poly(n: int, chi: DirichletCharacter) -> TwistedPolynomial:
    """G_{n,χ}(x) expanded exactly.

    Args:
        n: Degree, ``n >= 0``.
        chi: A character of even modulus.

    Raises:
        PreconditionError: if the modulus is odd or ``n < 0``.
    """
    require_even_modulus(chi)
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    poly = _genocchi_closed_form(n, chi)
    logger.debug(
        "G_{%d,χ} mod %d index %d: degree %d", n, chi.modulus, chi.index, poly.degree
    )
    return TwistedPolynomial(n, chi, poly)


def gen_euler_poly(n: int, chi: DirichletCharacter) -> TwistedPolynomial:
    """E_{n,χ}(x) = G_{n+1,χ}(x)/(n+1)."""
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    g = gen_genocchi_poly(n + 1, chi)
    return TwistedPolynomial(n, chi, g.poly / (n + 1))


def gen_euler_number(n: int, chi: DirichletCharacter) -> Scalar:
    """E_{n,χ}(0)."""
    return _as_cyclotomic(gen_euler_poly(n, chi)(0), chi)


def gen_genocchi_number(n: int, chi: DirichletCharacter) -> Scalar:
    """G_{n,χ}(0)."""
    return _as_cyclotomic(gen_genocchi_poly(n, chi)(0), chi)


def _as_cyclotomic(value: Scalar, chi: DirichletCharacter) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value
    return CyclotomicNumber.rational(value, chi.order)
