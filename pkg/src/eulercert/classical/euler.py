"""Euler numbers and polynomials with generating function ``2/(e^t + 1)``.

These E_n are the values E_n(0) of the Euler polynomials and are rational
(E_1 = -1/2). They are *not* the integer secant numbers that many
libraries call "Euler numbers".
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction
from functools import lru_cache

from eulercert.arith.polynomial import RationalPolynomial
from eulercert.arith.rational import alternating_sign, binomial
from eulercert.classical.bernoulli import bernoulli_poly
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)

_EULER: list[Fraction] = [Fraction(1)]
_LOCK = threading.Lock()


def euler_numbers(n: int) -> tuple[Fraction, ...]:
    """Return ``(E_0, ..., E_n)`` from ``E_n = -(1/2)·Σ_{k<n} C(n, k)·E_k``."""
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    if n >= len(_EULER):
        with _LOCK:
            for m in range(len(_EULER), n + 1):
                acc = sum(binomial(m, k) * _EULER[k] for k in range(m))
                _EULER.append(-Fraction(acc) / 2)
            logger.debug("Euler table extended to n=%d", n)
    return tuple(_EULER[: n + 1])


def euler_number(n: int) -> Fraction:
    """Exact E_n in the ``2/(e^t + 1)`` convention.

    Examples::

        >>> [euler_number(k) for k in range(4)]
        [Fraction(1, 1), Fraction(-1, 2), Fraction(0, 1), Fraction(1, 4)]
    """
    return euler_numbers(n)[n]


@lru_cache(maxsize=None)
def euler_poly(n: int) -> RationalPolynomial:
    """E_n(x) = Σ_{k=0}^{n} C(n, k)·E_k·x^{n-k}; satisfies E_n(x+1) + E_n(x) = 2x^n."""
    e = euler_numbers(n)
    return RationalPolynomial(tuple(binomial(n, k) * e[n - k] for k in range(n + 1)))


def moment(n: int, d: int) -> Fraction:
    """The fermionic moment ``∫ x^n dμ`` written through Bernoulli values.

    Returns ``(2·d^n/(n+1))·Σ_{l=0}^{d-1} (-1)^{l-1}·B_{n+1}(l/d)``, which
    equals E_n for every even d.

    Raises:
        PreconditionError: if *d* is not an even integer >= 2.
    """
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    if d < 2 or d % 2:
        raise PreconditionError(f"moment needs an even modulus d >= 2, got {d}")
    b = bernoulli_poly(n + 1)
    total = sum(alternating_sign(l) * b(Fraction(l, d)) for l in range(d))
    return Fraction(2 * d**n, n + 1) * total
