"""Generating-function routes to the classical sequences.

Each builder returns a :class:`TruncatedSeries` of the requested order;
extraction with :func:`series_coeff_factorial` gives the sequence value.
These are the oracles the recurrences in :mod:`bernoulli`,
:mod:`euler` and :mod:`genocchi` are checked against.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from eulercert.arith.rational import alternating_sign
from eulercert.arith.series import (
    TruncatedSeries,
    series_coeff_factorial,
    series_div_cancel,
    series_exp_linear,
)
from eulercert.classical.bernoulli import bernoulli_numbers
from eulercert.classical.euler import euler_numbers
from eulercert.classical.genocchi import genocchi_number
from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)

SEQUENCE_KINDS = ("bernoulli", "euler", "genocchi")


@dataclass(frozen=True)
class SequenceTable:
    """Values ``values[n]`` of one classical sequence for ``n = 0 .. len - 1``."""

    kind: str
    values: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def bernoulli_series(order: int) -> TruncatedSeries:
    """``t/(e^t - 1)`` to the given order."""
    num = TruncatedSeries(order + 1, (0, 1))
    return series_div_cancel(num, series_exp_linear(1, order + 1) - 1)


@lru_cache(maxsize=None)
def euler_series(order: int) -> TruncatedSeries:
    """``2/(e^t + 1)`` to the given order."""
    return series_div_cancel(
        TruncatedSeries(order, (2,)), series_exp_linear(1, order) + 1
    )


@lru_cache(maxsize=None)
def genocchi_series(order: int) -> TruncatedSeries:
    """``2t/(e^t + 1)`` to the given order."""
    return euler_series(order).mul_t().truncate(order)


def euler_poly_series(x, order: int) -> TruncatedSeries:
    """``2·e^{xt}/(e^t + 1)`` at a fixed rational *x*."""
    return euler_series(order) * series_exp_linear(x, order)


def alternating_exp_sum(d: int, order: int) -> TruncatedSeries:
    """``2·Σ_{l=0}^{d-1} (-1)^{l-1}·e^{lt}``."""
    total = TruncatedSeries(order, ())
    for l in range(d):
        total = total + series_exp_linear(l, order) * alternating_sign(l)
    return total * 2


def alternating_quotient(d: int, order: int) -> TruncatedSeries:
    """``2·Σ_{l<d} (-1)^{l-1} e^{lt} / (e^{dt} - 1)`` with the common ``t`` cancelled.

    For even *d* this equals ``2/(e^t + 1)``; the result has the given
    order.

    Raises:
        PreconditionError: if *d* is not even and positive.
    """
    if d < 2 or d % 2:
        raise PreconditionError(f"the alternating quotient needs an even d, got {d}")
    num = alternating_exp_sum(d, order + 1)
    den = series_exp_linear(d, order + 1) - 1
    return series_div_cancel(num, den)


def sequence_table(kind: str, max_n: int) -> SequenceTable:
    """Recurrence values of *kind* for ``n = 0 .. max_n``."""
    if kind == "bernoulli":
        values = bernoulli_numbers(max_n)
    elif kind == "euler":
        values = euler_numbers(max_n)
    elif kind == "genocchi":
        values = tuple(genocchi_number(n) for n in range(max_n + 1))
    else:
        raise PreconditionError(f"unknown sequence kind: {kind!r}")
    return SequenceTable(kind, tuple(values))


def oracle_table(kind: str, max_n: int) -> SequenceTable:
    """Generating-function values of *kind* for ``n = 0 .. max_n``."""
    builders = {
        "bernoulli": bernoulli_series,
        "euler": euler_series,
        "genocchi": genocchi_series,
    }
    if kind not in builders:
        raise PreconditionError(f"unknown sequence kind: {kind!r}")
    series = builders[kind](max_n + 1)
    values = tuple(series_coeff_factorial(series, n) for n in range(max_n + 1))
    return SequenceTable(kind, values)
