"""Classical Bernoulli, Euler and Genocchi numbers and polynomials.

Usage::

    from eulercert.classical import euler_number, bernoulli_poly

    euler_number(3)       # Fraction(1, 4)
    bernoulli_poly(2)(0)  # Fraction(1, 6)
"""

from eulercert.classical.bernoulli import bernoulli_number, bernoulli_poly
from eulercert.classical.euler import euler_number, euler_poly, moment
from eulercert.classical.generating import (
    SequenceTable,
    oracle_table,
    sequence_table,
)
from eulercert.classical.genocchi import genocchi_number, genocchi_poly

__all__ = [
    "SequenceTable",
    "bernoulli_number",
    "bernoulli_poly",
    "euler_number",
    "euler_poly",
    "genocchi_number",
    "genocchi_poly",
    "moment",
    "oracle_table",
    "sequence_table",
]
