"""Exact rational helpers shared by every module.

``ExactRational`` is :class:`fractions.Fraction`: it keeps
``gcd(|num|, den) = 1`` with a positive denominator, and zero is ``0/1``.
This module adds the pieces Fraction does not provide: literal parsing in
the ``"a/b"`` form used by the CLI, memoized binomial coefficients and
signed alternating weights.
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction

from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)

ExactRational = Fraction

# Pascal rows grow monotonically; the lock keeps concurrent growers from
# appending the same row twice.
_PASCAL_ROWS: list[tuple[int, ...]] = [(1,)]
_PASCAL_LOCK = threading.Lock()


def as_rational(value: int | Fraction | str) -> Fraction:
    """Coerce *value* to a :class:`Fraction`, parsing ``"a/b"`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot treat {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal such as ``"3"``, ``"-1/2"`` or ``"6/4"``.

    Decimal and exponent notation is rejected: every value in this
    package is exact.

    Raises:
        PreconditionError: if *text* is not an integer or ``a/b`` literal
            with a nonzero denominator.
    """
    raw = text.strip()
    num_text, sep, den_text = raw.partition("/")
    try:
        numerator = int(num_text)
        denominator = int(den_text) if sep else 1
    except ValueError:
        raise PreconditionError(f"not an exact rational literal: {text!r}") from None
    if denominator == 0:
        raise PreconditionError(f"zero denominator in rational literal: {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction | int) -> str:
    """Serialize a rational as ``"num/den"``, omitting the denominator when it is 1."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def pascal_row(n: int) -> tuple[int, ...]:
    """Return row *n* of Pascal's triangle, extending the shared cache as needed."""
    if n < 0:
        raise PreconditionError(f"binomial row must be >= 0, got {n}")
    if n >= len(_PASCAL_ROWS):
        with _PASCAL_LOCK:
            while len(_PASCAL_ROWS) <= n:
                prev = _PASCAL_ROWS[-1]
                row = tuple(a + b for a, b in zip((0,) + prev, prev + (0,)))
                _PASCAL_ROWS.append(row)
    return _PASCAL_ROWS[n]


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return pascal_row(n)[k]


def alternating_sign(l: int) -> int:
    """Return ``(-1)^(l-1)``, the weight carried by every alternating sum here."""
    return 1 if l % 2 == 1 else -1
