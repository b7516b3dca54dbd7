"""Tests for classical Bernoulli, Euler and Genocchi numbers and polynomials.

sympy's Bernoulli and Euler *polynomials* use the same conventions as this
package, so their coefficient vectors are compared directly. sympy's
``euler(n)`` numbers are the integer secant numbers, which are a different
sequence and are only used where that is the point of the test.
"""

from fractions import Fraction

import pytest
import sympy

from eulercert.arith.series import series_coeff_factorial
from eulercert.classical.bernoulli import bernoulli_number, bernoulli_poly
from eulercert.classical.euler import euler_number, euler_poly, moment
from eulercert.classical.generating import (
    alternating_quotient,
    euler_series,
    oracle_table,
    sequence_table,
)
from eulercert.classical.genocchi import genocchi_number, genocchi_poly
from eulercert.exceptions import PreconditionError

X = sympy.Symbol("x")


def _sympy_coeffs(expr) -> list[Fraction]:
    """Coefficients of a sympy polynomial in x, lowest degree first."""
    coeffs = reversed(sympy.Poly(sympy.expand(expr), X).all_coeffs())
    return [Fraction(int(c.p), int(c.q)) for c in (sympy.Rational(c) for c in coeffs)]


# ---------------------------------------------------------------------------
# Numbers
# ---------------------------------------------------------------------------

class TestNumbers:
    def test_bernoulli_known_values(self):
        assert bernoulli_number(0) == 1
        assert bernoulli_number(1) == Fraction(-1, 2)
        assert bernoulli_number(2) == Fraction(1, 6)
        assert bernoulli_number(12) == Fraction(-691, 2730)

    def test_odd_bernoulli_vanish(self):
        assert all(bernoulli_number(n) == 0 for n in range(3, 40, 2))

    def test_euler_known_values(self):
        """E_n in the 2/(e^t + 1) convention, not secant numbers."""
        assert [euler_number(n) for n in range(6)] == [
            1, Fraction(-1, 2), 0, Fraction(1, 4), 0, Fraction(-1, 2)
        ]
        assert euler_number(7) == Fraction(17, 8)

    def test_genocchi_known_values(self):
        values = [genocchi_number(n) for n in range(9)]
        assert values == [0, 1, -1, 0, 1, 0, -3, 0, 17]

    def test_negative_degree_rejected(self):
        with pytest.raises(PreconditionError):
            bernoulli_number(-1)
        with pytest.raises(PreconditionError):
            genocchi_poly(-2)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class TestPolynomials:
    @pytest.mark.parametrize("n", range(0, 16))
    def test_bernoulli_poly_matches_sympy(self, n):
        assert list(bernoulli_poly(n).coeffs) == _sympy_coeffs(sympy.bernoulli(n, X))

    @pytest.mark.parametrize("n", range(0, 16))
    def test_euler_poly_matches_sympy(self, n):
        assert list(euler_poly(n).coeffs) == _sympy_coeffs(sympy.euler(n, X))

    @pytest.mark.parametrize("n", range(0, 12))
    def test_euler_poly_reflection(self, n):
        """E_n(x + 1) + E_n(x) = 2x^n at a handful of points."""
        p = euler_poly(n)
        for x in (Fraction(0), Fraction(1, 3), Fraction(-2), Fraction(5, 2)):
            assert p(x + 1) + p(x) == 2 * x**n

    def test_genocchi_poly_is_scaled_euler(self):
        for n in range(1, 10):
            assert genocchi_poly(n) == euler_poly(n - 1) * n
        assert genocchi_poly(0).is_zero()

    def test_polynomial_degree(self):
        assert bernoulli_poly(7).degree == 7
        assert euler_poly(7).degree == 7

    def test_secant_numbers_from_midpoint(self):
        """2^n·E_n(1/2) gives the integer secant numbers sympy calls euler(n)."""
        for n in range(0, 13):
            assert 2**n * euler_poly(n)(Fraction(1, 2)) == int(sympy.euler(n))


# ---------------------------------------------------------------------------
# Generating functions
# ---------------------------------------------------------------------------

class TestGenerating:
    @pytest.mark.parametrize("kind", ["bernoulli", "euler", "genocchi"])
    def test_oracle_matches_recurrence(self, kind):
        assert oracle_table(kind, 30).values == sequence_table(kind, 30).values

    def test_unknown_kind(self):
        with pytest.raises(PreconditionError):
            sequence_table("catalan", 4)

    @pytest.mark.parametrize("d", [2, 4, 6, 8, 10])
    def test_alternating_quotient_is_euler_series(self, d):
        assert alternating_quotient(d, 16) == euler_series(16)

    def test_alternating_quotient_needs_even_d(self):
        with pytest.raises(PreconditionError):
            alternating_quotient(3, 8)

    def test_euler_series_coefficients(self):
        s = euler_series(10)
        assert [series_coeff_factorial(s, n) for n in range(10)] == [euler_number(n) for n in range(10)]


class TestMoment:
    @pytest.mark.parametrize("d", [2, 4, 6, 8])
    def test_moment_is_euler_number(self, d):
        """The Bernoulli-sum moment equals E_n for every even d."""
        for n in range(0, 12):
            assert moment(n, d) == euler_number(n)

    def test_moment_rejects_odd_modulus(self):
        with pytest.raises(PreconditionError):
            moment(2, 3)
