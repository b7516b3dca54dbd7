"""Value tables behind the ``numbers``, ``poly``, ``chars``, ``twisted`` and
``fermionic`` commands. Every builder returns a table document from
:func:`~eulercert.reporting.composer.compose_table` with exact values
already encoded.
"""

from __future__ import annotations

import logging

from eulercert.arith.codec import encode_polynomial, encode_value
from eulercert.classical.bernoulli import bernoulli_number, bernoulli_poly
from eulercert.classical.euler import euler_number, euler_poly
from eulercert.classical.genocchi import genocchi_number, genocchi_poly
from eulercert.dirichlet.characters import (
    DirichletCharacter,
    enumerate_characters,
    is_even,
    is_primitive,
    is_principal,
)
from eulercert.fermionic.partial_sums import require_odd_prime, valuation_rows
from eulercert.reporting.composer import compose_table
from eulercert.twisted.polynomials import (
    gen_euler_number,
    gen_euler_poly,
    gen_genocchi_number,
)
from eulercert.twisted.power_sums import twisted_power_sum

logger = logging.getLogger(__name__)


def numbers_table(max_degree: int) -> dict:
    rows = [
        {
            "n": n,
            "bernoulli": encode_value(bernoulli_number(n)),
            "euler": encode_value(euler_number(n)),
            "genocchi": encode_value(genocchi_number(n)),
        }
        for n in range(max_degree + 1)
    ]
    return compose_table(
        "numbers", ["n", "bernoulli", "euler", "genocchi"], rows, {"max_degree": max_degree}
    )


def poly_table(max_degree: int, chi: DirichletCharacter | None = None) -> dict:
    """Coefficient vectors (lowest degree first) of B_n, E_n, G_n and, with *chi*, E_{n,χ}."""
    builders = [("bernoulli", bernoulli_poly), ("euler", euler_poly), ("genocchi", genocchi_poly)]
    rows = []
    for kind, build in builders:
        for n in range(max_degree + 1):
            rows.append({"kind": kind, "n": n, "coeffs": encode_polynomial(build(n))})
    params: dict = {"max_degree": max_degree}
    if chi is not None:
        params.update({"modulus": chi.modulus, "char_index": chi.index})
        for n in range(max_degree + 1):
            rows.append(
                {"kind": "euler_twisted", "n": n, "coeffs": encode_polynomial(gen_euler_poly(n, chi).poly)}
            )
    return compose_table("poly", ["kind", "n", "coeffs"], rows, params)


def chars_table(d: int) -> dict:
    rows = [
        {
            "modulus": chi.modulus,
            "index": chi.index,
            "exponents": list(chi.exponents),
            "conductor": chi.conductor,
            "parity": "even" if is_even(chi) else "odd",
            "principal": is_principal(chi),
            "primitive": is_primitive(chi),
            "values": encode_value(list(chi.values)),
        }
        for chi in enumerate_characters(d)
    ]
    columns = ["modulus", "index", "exponents", "conductor", "parity", "principal", "primitive", "values"]
    return compose_table("chars", columns, rows, {"modulus": d})


def twisted_table(chi: DirichletCharacter, max_degree: int, upper: int | None = None) -> dict:
    """E_{n,χ}(0), G_{n,χ}(0) and T_{n,χ}(upper) for ``n = 0 .. max_degree``.

    *upper* defaults to ``d - 1``.
    """
    if upper is None:
        upper = chi.modulus - 1
    rows = [
        {
            "n": n,
            "euler": encode_value(gen_euler_number(n, chi)),
            "genocchi": encode_value(gen_genocchi_number(n, chi)),
            "power_sum": encode_value(twisted_power_sum(n, chi, upper)),
        }
        for n in range(max_degree + 1)
    ]
    params = {"modulus": chi.modulus, "char_index": chi.index, "upper": upper}
    return compose_table("twisted", ["n", "euler", "genocchi", "power_sum"], rows, params)


def fermionic_table(primes: list[int], max_degree: int, max_level: int) -> dict:
    """Valuation table: one row per ``(p, n, N)``."""
    rows = []
    for p in sorted(primes):
        require_odd_prime(p)
        for n in range(max_degree + 1):
            for row in valuation_rows(p, n, max_level):
                rows.append({key: encode_value(value) for key, value in row.items()})
    params = {"primes": sorted(primes), "max_degree": max_degree, "max_level": max_level}
    return compose_table(
        "fermionic", ["p", "n", "N", "partial_sum", "euler", "valuation"], rows, params
    )
