"""Tests for unit-group bases and Dirichlet characters."""

import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from eulercert.arith.codec import encode_scalar
from eulercert.arith.cyclotomic import CyclotomicNumber
from eulercert.dirichlet.characters import (
    alternating_character_sum,
    char_eval,
    character_from_dict,
    character_sum,
    character_to_dict,
    conductor,
    enumerate_characters,
    get_character,
    is_even,
    is_primitive,
    is_principal,
)
from eulercert.dirichlet.units import discrete_log, primitive_root, unit_group_basis, unit_log_table
from eulercert.exceptions import PreconditionError

MODULI = [1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24]


# ---------------------------------------------------------------------------
# Unit groups
# ---------------------------------------------------------------------------

class TestUnitGroup:
    def test_known_bases(self):
        assert unit_group_basis(8).generators == (7, 5)
        assert unit_group_basis(4).generators == (3,)
        assert unit_group_basis(12).generators == (7, 5)
        assert unit_group_basis(2).generators == ()

    @pytest.mark.parametrize("d", MODULI)
    def test_orders_multiply_to_totient(self, d):
        assert math.prod(unit_group_basis(d).orders) == sympy.totient(d)

    @pytest.mark.parametrize("d", MODULI)
    def test_log_table_covers_units(self, d):
        table = unit_log_table(d)
        assert sorted(table) == [u for u in range(d) if math.gcd(u, d) == 1]

    @pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 25, 27])
    def test_primitive_root_matches_sympy(self, q):
        assert primitive_root(q) == sympy.primitive_root(q)

    def test_discrete_log_rejects_non_units(self):
        with pytest.raises(PreconditionError):
            discrete_log(8, 4)
        assert discrete_log(8, 3) == (1, 1)


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

class TestCharacters:
    @pytest.mark.parametrize("d", MODULI)
    def test_count_and_principal_first(self, d):
        chars = enumerate_characters(d)
        assert len(chars) == sympy.totient(d)
        assert is_principal(chars[0])
        assert not any(is_principal(chi) for chi in chars[1:])

    def test_mod4_values(self, chi4):
        assert [char_eval(chi4, n) for n in range(4)] == [0, 1, 0, -1]
        assert char_eval(chi4, -1) == -1
        assert char_eval(chi4, 7) == -1

    def test_mod8_conductors_and_parity(self, chars8):
        assert [chi.conductor for chi in chars8] == [1, 8, 4, 8]
        assert [is_even(chi) for chi in chars8] == [True, True, False, False]
        assert [is_primitive(chi) for chi in chars8] == [False, True, False, True]

    def test_mod12_conductors(self, chars12):
        assert [conductor(chi) for chi in chars12] == [1, 3, 4, 12]

    @pytest.mark.parametrize("d", [8, 12, 15, 16])
    def test_multiplicative(self, d):
        for chi in enumerate_characters(d):
            for a in range(d):
                for b in range(d):
                    assert chi(a * b) == chi(a) * chi(b)

    @given(st.sampled_from([5, 7, 9, 16, 20]), st.integers(-200, 200))
    def test_periodic(self, d, n):
        for chi in enumerate_characters(d):
            assert chi(n) == chi(n + d)

    @pytest.mark.parametrize("d", [4, 8, 9, 12])
    def test_orthogonality(self, d):
        """Σ_l χ(l) is φ(d) for the principal character and zero otherwise."""
        for chi in enumerate_characters(d):
            expected = sympy.totient(d) if is_principal(chi) else 0
            assert character_sum(chi) == int(expected)

    def test_alternating_sum_even_modulus(self, chars8):
        """For even d every unit is odd, so the alternating sum equals the plain sum."""
        for chi in chars8:
            assert alternating_character_sum(chi) == character_sum(chi)

    def test_values_live_in_common_field(self):
        chars = enumerate_characters(5)
        assert all(v.order == 4 for chi in chars for v in chi.values)
        assert chars[1](2) == CyclotomicNumber.root_of_unity(4)

    def test_get_character_out_of_range(self):
        with pytest.raises(PreconditionError):
            get_character(4, 2)

    def test_dict_roundtrip(self, chars12):
        chi = chars12[3]
        data = character_to_dict(chi)
        assert data["conductor"] == 12
        assert character_from_dict(data) == chi

    def test_dict_rejects_tampered_values(self, chi4):
        data = character_to_dict(chi4)
        data["values"][1] = encode_scalar(CyclotomicNumber.rational(-1, 2))
        with pytest.raises(PreconditionError):
            character_from_dict(data)
