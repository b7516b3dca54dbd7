"""JSON-ready encodings of exact values, and their inverses.

* rationals: ``"num/den"`` strings, denominator omitted when 1;
* cyclotomic numbers: ``{"order": m, "coeffs": [rational strings]}``;
* polynomials and series: coefficient arrays, index = degree.

Decimals never appear in an encoding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from eulercert.arith.cyclotomic import CyclotomicNumber
from eulercert.arith.polynomial import RationalPolynomial
from eulercert.arith.rational import format_rational, parse_rational
from eulercert.arith.series import TruncatedSeries


def encode_scalar(value) -> Any:
    """Encode a rational or cyclotomic scalar.

    Cyclotomic numbers that happen to be rational are still encoded as
    objects, so decoding restores the same type.
    """
    if isinstance(value, CyclotomicNumber):
        return {
            "order": value.order,
            "coeffs": [format_rational(c) for c in value.coeffs],
        }
    return format_rational(value)


def decode_scalar(data: Any):
    """Inverse of :func:`encode_scalar`."""
    if isinstance(data, dict):
        return CyclotomicNumber(
            int(data["order"]), tuple(parse_rational(c) for c in data["coeffs"])
        )
    if isinstance(data, int):
        return Fraction(data)
    return parse_rational(str(data))


def encode_polynomial(p: RationalPolynomial) -> list:
    return [encode_scalar(c) for c in p.coeffs]


def decode_polynomial(data: list) -> RationalPolynomial:
    return RationalPolynomial(tuple(decode_scalar(c) for c in data))


def encode_series(s: TruncatedSeries) -> dict:
    return {"order": s.order, "coeffs": [encode_scalar(c) for c in s.coeffs]}


def decode_series(data: dict) -> TruncatedSeries:
    return TruncatedSeries(
        int(data["order"]), tuple(decode_scalar(c) for c in data["coeffs"])
    )


def encode_value(value) -> Any:
    """Encode any value a certificate may carry (scalars, polynomials, lists, dicts)."""
    if isinstance(value, RationalPolynomial):
        return encode_polynomial(value)
    if isinstance(value, TruncatedSeries):
        return encode_series(value)
    if isinstance(value, (Fraction, CyclotomicNumber)):
        return encode_scalar(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        # only +infinity (a valuation of zero) reaches here
        return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")
