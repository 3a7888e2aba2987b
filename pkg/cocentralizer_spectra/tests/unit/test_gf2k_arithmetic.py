import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cocentralizer_spectra.exceptions import FieldDegreeOutOfRangeError, FieldDivisionByZeroError
from cocentralizer_spectra.finite_groups.galois.gf2k_arithmetic import Gf2kArithmetic


class TestGf2kArithmetic:
    """Tests for polynomial-basis GF(2^k) arithmetic."""

    @pytest.mark.parametrize(
        "k, modulus",
        [(1, 0b11), (2, 0b111), (3, 0b1011), (4, 0b10011)],
    )
    def test_gf_build_picks_smallest_irreducible_modulus(self, k, modulus):
        field = Gf2kArithmetic.gf_build(k)

        assert field.k == k
        assert field.modulus == modulus
        assert field.size == 2**k

    def test_gf_build_modulus_text(self):
        assert Gf2kArithmetic.gf_build(3).modulus_text() == "x^3 + x + 1"

    @pytest.mark.parametrize("k", [0, -1, 17])
    def test_gf_build_rejects_out_of_range_degree(self, k):
        with pytest.raises(FieldDegreeOutOfRangeError):
            Gf2kArithmetic.gf_build(k)

    def test_gf_build_rejects_bool(self):
        with pytest.raises(FieldDegreeOutOfRangeError):
            Gf2kArithmetic.gf_build(True)

    @pytest.mark.parametrize(
        "polynomial, expected",
        [(0b111, True), (0b101, False), (0b1011, True), (0b1001, False), (0b10011, True), (0b10101, False)],
    )
    def test_is_irreducible(self, polynomial, expected):
        assert Gf2kArithmetic.is_irreducible(polynomial) is expected

    def test_gf4_multiplication(self):
        field = Gf2kArithmetic.gf_build(2)

        # x * x = x + 1 and x * (x + 1) = 1 modulo x^2 + x + 1
        assert Gf2kArithmetic.gf_mul(field, 0b10, 0b10) == 0b11
        assert Gf2kArithmetic.gf_mul(field, 0b10, 0b11) == 1

    def test_gf_inv_of_zero_raises(self):
        field = Gf2kArithmetic.gf_build(3)

        with pytest.raises(FieldDivisionByZeroError):
            Gf2kArithmetic.gf_inv(field, 0)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_every_nonzero_element_has_an_inverse(self, k):
        field = Gf2kArithmetic.gf_build(k)

        for a in range(1, field.size):
            assert Gf2kArithmetic.gf_mul(field, a, Gf2kArithmetic.gf_inv(field, a)) == 1

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_multiplicative_group_order(self, k):
        field = Gf2kArithmetic.gf_build(k)

        for a in range(1, field.size):
            assert Gf2kArithmetic.gf_pow(field, a, field.size - 1) == 1

    def test_multiplication_table_is_symmetric_and_read_only(self):
        field = Gf2kArithmetic.gf_build(3)
        table = Gf2kArithmetic.multiplication_table(field)

        assert table.shape == (8, 8)
        assert np.array_equal(table, table.T)
        assert np.array_equal(table[1], np.arange(8))
        assert not table.flags.writeable

    @settings(max_examples=200, deadline=None)
    @given(
        k=st.integers(min_value=1, max_value=8),
        a=st.integers(min_value=0, max_value=255),
        b=st.integers(min_value=0, max_value=255),
        c=st.integers(min_value=0, max_value=255),
    )
    def test_field_axioms_hold(self, k, a, b, c):
        field = Gf2kArithmetic.gf_build(k)
        a, b, c = a % field.size, b % field.size, c % field.size
        mul = Gf2kArithmetic.gf_mul

        assert field.contains(mul(field, a, b))
        assert mul(field, a, b) == mul(field, b, a)
        assert mul(field, mul(field, a, b), c) == mul(field, a, mul(field, b, c))
        assert mul(field, a, b ^ c) == mul(field, a, b) ^ mul(field, a, c)
