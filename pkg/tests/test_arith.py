"""Tests for the exact arithmetic layer: rationals, cyclotomic numbers,
polynomials and truncated power series.

Algebraic laws are checked as hypothesis properties; sympy serves as an
independent oracle for cyclotomic polynomials and totients.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from eulercert.arith.codec import (
    decode_polynomial,
    decode_scalar,
    encode_scalar,
    encode_value,
)
from eulercert.arith.cyclotomic import CyclotomicNumber, cyc_invert, cyclotomic_coeffs
from eulercert.arith.integers import divisors, factorize, is_prime, mobius, totient
from eulercert.arith.polynomial import (
    RationalPolynomial,
    cyclotomic_polynomial,
    interpolation_points,
    poly_compose_affine,
    poly_shift,
)
from eulercert.arith.rational import (
    alternating_sign,
    binomial,
    format_rational,
    parse_rational,
)
from eulercert.arith.series import (
    TruncatedSeries,
    series_coeff_factorial,
    series_div_cancel,
    series_exp_linear,
)
from eulercert.exceptions import NonCancellingPoleError, PreconditionError, TruncationError

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def cyclotomic_numbers(draw, order=None):
    m = order if order is not None else draw(orders)
    coeffs = draw(st.lists(rationals, min_size=0, max_size=m))
    return CyclotomicNumber(m, tuple(coeffs))


polynomials = st.lists(rationals, max_size=6).map(lambda cs: RationalPolynomial(tuple(cs)))


# ---------------------------------------------------------------------------
# Rationals and integers
# ---------------------------------------------------------------------------

class TestRationals:
    def test_parse_reduces(self):
        """'6/4' parses to 3/2."""
        assert parse_rational("6/4") == Fraction(3, 2)
        assert parse_rational(" -7 ") == Fraction(-7)

    @pytest.mark.parametrize("text", ["1.5", "1e3", "a/b", "1/0", ""])
    def test_parse_rejects(self, text):
        """Decimals, garbage and zero denominators are precondition errors."""
        with pytest.raises(PreconditionError):
            parse_rational(text)

    def test_format_omits_unit_denominator(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 2)) == "-1/2"

    @given(rationals)
    def test_format_parse_inverse(self, q):
        """Formatting then parsing returns the same rational."""
        assert parse_rational(format_rational(q)) == q

    def test_binomial_edges(self):
        assert binomial(10, 3) == 120
        assert binomial(5, -1) == 0
        assert binomial(5, 6) == 0

    def test_alternating_sign(self):
        """(-1)^(l-1): negative at even l, including l = 0."""
        assert [alternating_sign(l) for l in range(5)] == [-1, 1, -1, 1, -1]


class TestIntegers:
    def test_factorize(self):
        assert factorize(360) == ((2, 3), (3, 2), (5, 1))
        assert factorize(1) == ()

    @pytest.mark.parametrize("n", range(1, 60))
    def test_totient_matches_sympy(self, n):
        assert totient(n) == sympy.totient(n)

    @pytest.mark.parametrize("n", range(1, 60))
    def test_mobius_matches_sympy(self, n):
        assert mobius(n) == sympy.mobius(n)

    def test_divisors_and_primes(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


# ---------------------------------------------------------------------------
# Cyclotomic numbers
# ---------------------------------------------------------------------------

class TestCyclotomic:
    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 24])
    def test_cyclotomic_coeffs_match_sympy(self, m):
        """Φ_m agrees with sympy's cyclotomic polynomial."""
        x = sympy.Symbol("x")
        expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs())]
        assert list(cyclotomic_coeffs(m)) == expected

    @pytest.mark.parametrize("m", [2, 3, 5, 7, 12])
    def test_cyclotomic_polynomial_degree_and_value_at_one(self, m):
        phi = cyclotomic_polynomial(m)
        assert phi.degree == totient(m)
        assert phi(Fraction(1)) == (m if is_prime(m) else 1)

    def test_roots_of_unity(self):
        i = CyclotomicNumber.root_of_unity(4)
        assert i * i == -1
        assert CyclotomicNumber.root_of_unity(2) == -1
        z3 = CyclotomicNumber.root_of_unity(3)
        assert z3 + z3 * z3 == -1

    def test_mixed_orders_embed(self):
        """ζ_6 = -ζ_3^2 once both live in Q(ζ_6)."""
        z3 = CyclotomicNumber.root_of_unity(3)
        z6 = CyclotomicNumber.root_of_unity(6)
        assert z6 == -(z3 * z3)
        assert (z3 + z6).order == 6

    def test_equal_values_hash_equal(self):
        a = CyclotomicNumber.root_of_unity(3)
        b = CyclotomicNumber.root_of_unity(6, 2)
        assert a == b
        assert hash(a) == hash(b)
        assert hash(CyclotomicNumber.rational(Fraction(1, 2), 8)) == hash(Fraction(1, 2))

    def test_to_rational(self):
        assert CyclotomicNumber.rational(3, 4).to_rational() == 3
        with pytest.raises(ValueError):
            CyclotomicNumber.root_of_unity(4).to_rational()

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            cyc_invert(CyclotomicNumber.rational(0, 5))

    @given(cyclotomic_numbers(), cyclotomic_numbers())
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @settings(max_examples=50)
    @given(cyclotomic_numbers(order=12), cyclotomic_numbers(order=12), cyclotomic_numbers(order=12))
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=50)
    @given(cyclotomic_numbers())
    def test_inverse(self, z):
        if z.is_zero():
            return
        assert z * cyc_invert(z) == 1

    @given(cyclotomic_numbers(), rationals)
    def test_rational_scalars(self, z, q):
        assert z * q == q * z
        assert (z + q) - q == z


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        p = RationalPolynomial((1, 2, 0, 0))
        assert p.degree == 1
        assert RationalPolynomial.zero().is_zero()

    def test_compose_affine(self):
        """(x^2)(1 + 2x) = 1 + 4x + 4x^2."""
        p = poly_compose_affine(RationalPolynomial((0, 0, 1)), 1, 2)
        assert p == RationalPolynomial((1, 4, 4))

    @given(polynomials, rationals, rationals)
    def test_evaluation_homomorphism(self, p, a, x):
        """Composition then evaluation equals evaluation at the affine image."""
        assert poly_compose_affine(p, a, 2)(x) == p(a + 2 * x)

    @given(polynomials, rationals)
    def test_shift_inverse(self, p, a):
        assert poly_shift(poly_shift(p, a), -a) == p

    @given(polynomials, polynomials, rationals)
    def test_product_evaluates(self, p, q, x):
        assert (p * q)(x) == p(x) * q(x)

    def test_interpolation_points_distinct(self):
        points = interpolation_points(5)
        assert points == [0, Fraction(1, 2), 1, Fraction(3, 2), 2]


# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------

class TestSeries:
    def test_exp_coefficients(self):
        s = series_exp_linear(1, 5)
        assert [series_coeff_factorial(s, n) for n in range(5)] == [1, 1, 1, 1, 1]

    def test_exp_product(self):
        """e^t · e^{-t} = 1 to the full order."""
        product = series_exp_linear(1, 8) * series_exp_linear(-1, 8)
        assert list(product.coeffs) == [1] + [0] * 7

    def test_coefficient_past_order(self):
        with pytest.raises(TruncationError):
            series_exp_linear(1, 3).coefficient(3)

    def test_div_cancel_order(self):
        """(e^t - 1)/t: cancelling t lowers the order by one."""
        num = series_exp_linear(1, 6) - 1
        den = TruncatedSeries(6, (0, 1))
        q = series_div_cancel(num, den)
        assert q.order == 5
        assert q.coeffs[:3] == (1, Fraction(1, 2), Fraction(1, 6))

    def test_div_cancel_pole(self):
        """A numerator that does not vanish at t = 0 cannot be divided by t."""
        with pytest.raises(NonCancellingPoleError):
            series_div_cancel(TruncatedSeries(4, (1,)), TruncatedSeries(4, (0, 1)))

    def test_div_by_zero_series(self):
        with pytest.raises(ZeroDivisionError):
            series_div_cancel(TruncatedSeries(4, (1,)), TruncatedSeries(4, ()))

    def test_div_cancel_short_numerator(self):
        """A numerator known only up to the cancelled power leaves nothing to divide."""
        with pytest.raises(TruncationError, match="insufficient precision"):
            series_div_cancel(TruncatedSeries(2, ()), TruncatedSeries(6, (0, 0, 1)))

    @settings(max_examples=50)
    @given(st.lists(rationals, min_size=1, max_size=6), st.lists(rationals, min_size=1, max_size=6))
    def test_division_inverts_product(self, a, b):
        if b[0] == 0:
            return
        num = TruncatedSeries(6, tuple(a))
        den = TruncatedSeries(6, tuple(b))
        assert series_div_cancel(num * den, den) == num

    def test_shift_down(self):
        s = TruncatedSeries(4, (0, 0, 3, 1))
        assert s.shift_down(2).coeffs == (3, 1)
        with pytest.raises(NonCancellingPoleError):
            s.shift_down(3)


# ---------------------------------------------------------------------------
# Codec
# ---------------------------------------------------------------------------

class TestCodec:
    def test_scalar_encodings(self):
        assert encode_scalar(Fraction(-1, 2)) == "-1/2"
        assert encode_scalar(CyclotomicNumber.root_of_unity(4)) == {"order": 4, "coeffs": ["0", "1"]}

    def test_values_keep_json_types(self):
        assert encode_value({"n": 3, "ok": True, "v": float("inf")}) == {"n": 3, "ok": True, "v": "inf"}

    @given(cyclotomic_numbers())
    def test_cyclotomic_decodes(self, z):
        assert decode_scalar(encode_scalar(z)) == z

    def test_polynomial_decodes(self):
        p = RationalPolynomial((Fraction(1, 3), 0, -2))
        assert decode_polynomial(encode_value(p)) == p
