"""Elementary integer number theory by trial division.

Moduli handled by this package stay at desk scale (well below 10^4), so
trial division is all the factorization machinery needed.
"""

from __future__ import annotations

import math
from functools import lru_cache

from eulercert.exceptions import PreconditionError


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Return the prime factorization of *n* as ascending ``(p, k)`` pairs.

    Examples::

        >>> factorize(12)
        ((2, 2), (3, 1))
        >>> factorize(1)
        ()
    """
    if n < 1:
        raise PreconditionError(f"can only factor positive integers, got {n}")
    factors: list[tuple[int, int]] = []
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            k = 0
            while remaining % p == 0:
                remaining //= p
                k += 1
            factors.append((p, k))
        p += 1 if p == 2 else 2
    if remaining > 1:
        factors.append((remaining, 1))
    return tuple(factors)


def is_prime(n: int) -> bool:
    """True when *n* is a prime number."""
    return n >= 2 and factorize(n) == ((n, 1),)


def totient(n: int) -> int:
    """Euler's totient φ(n)."""
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    """The Möbius function μ(n)."""
    factors = factorize(n)
    if any(k > 1 for _, k in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of *n* in ascending order."""
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def lcm_all(values: list[int] | tuple[int, ...]) -> int:
    """Least common multiple of *values*; 1 for an empty sequence."""
    result = 1
    for v in values:
        result = result * v // math.gcd(result, v)
    return result


def multiplicative_order(a: int, n: int) -> int:
    """Smallest ``k >= 1`` with ``a^k ≡ 1 (mod n)``.

    Raises:
        PreconditionError: if ``gcd(a, n) != 1``.
    """
    if math.gcd(a, n) != 1:
        raise PreconditionError(f"{a} is not a unit modulo {n}")
    if n == 1:
        return 1
    k, value = 1, a % n
    while value != 1:
        value = value * a % n
        k += 1
    return k
