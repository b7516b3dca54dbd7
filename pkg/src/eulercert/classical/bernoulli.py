"""Bernoulli numbers and polynomials (convention ``t/(e^t - 1)``, so B_1 = -1/2).

Numbers come from the recurrence ``Σ_{k=0}^{n} C(n+1, k)·B_k = 0`` and are
cached in a table that only ever grows.
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction
from functools import lru_cache

from eulercert.arith.polynomial import RationalPolynomial
from eulercert.arith.rational import binomial
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)

_BERNOULLI: list[Fraction] = [Fraction(1)]
_LOCK = threading.Lock()


def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """Return ``(B_0, ..., B_n)``."""
    if n < 0:
        raise PreconditionError(f"degree must be >= 0, got {n}")
    if n >= len(_BERNOULLI):
        with _LOCK:
            for m in range(len(_BERNOULLI), n + 1):
                acc = sum(binomial(m + 1, k) * _BERNOULLI[k] for k in range(m))
                _BERNOULLI.append(-Fraction(acc) / (m + 1))
            logger.debug("Bernoulli table extended to n=%d", n)
    return tuple(_BERNOULLI[: n + 1])


def bernoulli_number(n: int) -> Fraction:
    """Exact B_n.

    Examples::

        >>> bernoulli_number(1)
        Fraction(-1, 2)
        >>> bernoulli_number(12)
        Fraction(-691, 2730)
    """
    return bernoulli_numbers(n)[n]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> RationalPolynomial:
    """B_n(x) = Σ_{k=0}^{n} C(n, k)·B_k·x^{n-k}, of degree exactly n."""
    b = bernoulli_numbers(n)
    return RationalPolynomial(tuple(binomial(n, k) * b[n - k] for k in range(n + 1)))
