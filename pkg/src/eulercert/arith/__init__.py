"""Exact scalar, polynomial and truncated power series arithmetic.

Exports the operations every other sub-package builds on::

    from eulercert.arith import series_exp_linear, series_div_cancel
"""

from eulercert.arith.cyclotomic import CyclotomicNumber, cyc_invert
from eulercert.arith.polynomial import (
    RationalPolynomial,
    cyclotomic_polynomial,
    poly_compose_affine,
)
from eulercert.arith.rational import ExactRational, binomial, parse_rational
from eulercert.arith.series import (
    TruncatedSeries,
    series_coeff_factorial,
    series_div_cancel,
    series_exp_linear,
)

__all__ = [
    "CyclotomicNumber",
    "ExactRational",
    "RationalPolynomial",
    "TruncatedSeries",
    "binomial",
    "cyc_invert",
    "cyclotomic_polynomial",
    "parse_rational",
    "poly_compose_affine",
    "series_coeff_factorial",
    "series_div_cancel",
    "series_exp_linear",
]
