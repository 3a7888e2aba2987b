import logging
from functools import lru_cache

import numpy as np

from cocentralizer_spectra.constants import MAX_FIELD_DEGREE, MIN_FIELD_DEGREE
from cocentralizer_spectra.exceptions import FieldDegreeOutOfRangeError, FieldDivisionByZeroError
from cocentralizer_spectra.finite_groups.domain.field_gf2k import FieldGF2k

logger = logging.getLogger(__name__)


class Gf2kArithmetic:
    """Polynomial-basis arithmetic in GF(2^k); elements and moduli are coefficient bit patterns."""

    ERROR_MSG_DEGREE_OUT_OF_RANGE = "GF(2^k) degree must satisfy %d <= k <= %d, got k=%s"
    ERROR_MSG_INVERT_ZERO = "Cannot invert the zero element of GF(2^%d)"

    @staticmethod
    def gf_build(k: int) -> FieldGF2k:
        """GF(2^k) with the smallest irreducible degree-k modulus having a nonzero constant term."""
        if isinstance(k, bool) or not isinstance(k, int) or not MIN_FIELD_DEGREE <= k <= MAX_FIELD_DEGREE:
            raise FieldDegreeOutOfRangeError(
                Gf2kArithmetic.ERROR_MSG_DEGREE_OUT_OF_RANGE % (MIN_FIELD_DEGREE, MAX_FIELD_DEGREE, k)
            )
        return _build_field(k)

    @staticmethod
    def is_irreducible(polynomial: int) -> bool:
        degree = polynomial.bit_length() - 1
        if degree < 1:
            return False
        for divisor in range(2, 1 << (degree // 2 + 1)):
            if Gf2kArithmetic._poly_divmod(polynomial, divisor)[1] == 0:
                return False
        return True

    @staticmethod
    def gf_mul(field: FieldGF2k, a: int, b: int) -> int:
        return Gf2kArithmetic._reduce(Gf2kArithmetic._carryless_multiply(a, b), field.modulus)

    @staticmethod
    def gf_inv(field: FieldGF2k, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZeroError(Gf2kArithmetic.ERROR_MSG_INVERT_ZERO % field.k)
        # extended Euclid over GF(2)[x]; invariant s_i * a = r_i mod modulus
        r0, r1 = field.modulus, a
        s0, s1 = 0, 1
        while r1 != 1:
            quotient, remainder = Gf2kArithmetic._poly_divmod(r0, r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, s0 ^ Gf2kArithmetic._carryless_multiply(quotient, s1)
        return Gf2kArithmetic._reduce(s1, field.modulus)

    @staticmethod
    def gf_pow(field: FieldGF2k, a: int, exponent: int) -> int:
        result, base = 1, a
        while exponent:
            if exponent & 1:
                result = Gf2kArithmetic.gf_mul(field, result, base)
            base = Gf2kArithmetic.gf_mul(field, base, base)
            exponent >>= 1
        return result

    @staticmethod
    def multiplication_table(field: FieldGF2k) -> np.ndarray:
        return _multiplication_table(field)

    @staticmethod
    def _carryless_multiply(a: int, b: int) -> int:
        result = 0
        while b:
            if b & 1:
                result ^= a
            a <<= 1
            b >>= 1
        return result

    @staticmethod
    def _reduce(value: int, modulus: int) -> int:
        degree = modulus.bit_length() - 1
        while value.bit_length() - 1 >= degree:
            value ^= modulus << (value.bit_length() - 1 - degree)
        return value

    @staticmethod
    def _poly_divmod(dividend: int, divisor: int) -> tuple[int, int]:
        quotient = 0
        divisor_degree = divisor.bit_length() - 1
        while dividend and dividend.bit_length() - 1 >= divisor_degree:
            shift = dividend.bit_length() - 1 - divisor_degree
            quotient |= 1 << shift
            dividend ^= divisor << shift
        return quotient, dividend


@lru_cache(maxsize=None)
def _build_field(k: int) -> FieldGF2k:
    for candidate in range((1 << k) | 1, 1 << (k + 1), 2):
        if Gf2kArithmetic.is_irreducible(candidate):
            field = FieldGF2k(k=k, modulus=candidate)
            logger.debug("Built GF(2^%d) with modulus %s", k, field.modulus_text())
            return field
    raise FieldDegreeOutOfRangeError(Gf2kArithmetic.ERROR_MSG_DEGREE_OUT_OF_RANGE % (MIN_FIELD_DEGREE, MAX_FIELD_DEGREE, k))


@lru_cache(maxsize=8)
def _multiplication_table(field: FieldGF2k) -> np.ndarray:
    size = field.size
    table = np.zeros((size, size), dtype=np.int64)
    for a in range(size):
        for b in range(a, size):
            product = Gf2kArithmetic.gf_mul(field, a, b)
            table[a, b] = product
            table[b, a] = product
    table.setflags(write=False)
    return table
