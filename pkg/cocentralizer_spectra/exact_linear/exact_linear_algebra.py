import logging
import math
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from sympy import prevprime

from cocentralizer_spectra.constants import DEFAULT_EXACT_DIMENSION_CAP
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exceptions import UseNullityPathError
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix

# n * p^2 must stay below 2^63 for int64 matrix-vector products mod p
_PRIME_CEILING = 1 << 26


@lru_cache(maxsize=None)
def _modular_prime(position: int) -> int:
    if position == 0:
        return int(prevprime(_PRIME_CEILING))
    return int(prevprime(_modular_prime(position - 1)))


class ExactLinearAlgebra:
    """
    Exact characteristic polynomials, determinants and ranks of integer matrices.

    The characteristic polynomial is reduced to upper Hessenberg form modulo word-size primes and
    recovered by Chinese remaindering once the prime product exceeds twice a Hadamard bound on
    its coefficients. Determinant and rank use fraction-free (Bareiss) elimination.
    """

    ERROR_MSG_ABOVE_CAP = "Matrix dimension %d exceeds the exact characteristic polynomial cap %d; use nullity checks"
    LOG_MSG_CHAR_POLY = "Characteristic polynomial of a %dx%d matrix from %d primes"

    def __init__(
        self,
        exact_dimension_cap: int = DEFAULT_EXACT_DIMENSION_CAP,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._exact_dimension_cap = exact_dimension_cap
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    @property
    def exact_dimension_cap(self) -> int:
        return self._exact_dimension_cap

    def char_poly(self, matrix: IntMatrix) -> BigPoly:
        """det(λI - M), monic of degree n."""
        n = matrix.dimension
        if n > self._exact_dimension_cap:
            self._logger.info(self.ERROR_MSG_ABOVE_CAP, n, self._exact_dimension_cap)
            raise UseNullityPathError(self.ERROR_MSG_ABOVE_CAP % (n, self._exact_dimension_cap))
        if n == 0:
            return BigPoly.one()

        bound = self._coefficient_bound(matrix)
        combined: list[int] = []
        modulus = 1
        position = 0
        while modulus <= 2 * bound:
            prime = _modular_prime(position)
            position += 1
            residues = self._char_poly_mod_prime(matrix.rows, prime)
            if not combined:
                combined = residues
            else:
                inverse = pow(modulus % prime, -1, prime)
                combined = [
                    value + modulus * (((residue - value) * inverse) % prime)
                    for value, residue in zip(combined, residues)
                ]
            modulus *= prime

        half = modulus // 2
        self._logger.debug(self.LOG_MSG_CHAR_POLY, n, n, position)
        return BigPoly(tuple(value - modulus if value > half else value for value in combined))

    @staticmethod
    def determinant(matrix: IntMatrix) -> int:
        """Bareiss elimination with row pivoting."""
        n = matrix.dimension
        if n == 0:
            return 1
        rows = [list(row) for row in matrix.rows]
        sign = 1
        previous = 1
        for k in range(n - 1):
            pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
            if pivot_row is None:
                return 0
            if pivot_row != k:
                rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
                sign = -sign
            pivot = rows[k][k]
            pivot_tail = rows[k][k + 1 :]
            for i in range(k + 1, n):
                row = rows[i]
                factor = row[k]
                row[k + 1 :] = [
                    (pivot * value - factor * other) // previous for value, other in zip(row[k + 1 :], pivot_tail)
                ]
                row[k] = 0
            previous = pivot
        return sign * rows[n - 1][n - 1]

    @staticmethod
    def rank(matrix: IntMatrix) -> int:
        return ExactLinearAlgebra._fraction_free_rank([list(row) for row in matrix.rows])

    def nullity_at(self, matrix: IntMatrix, mu: int) -> int:
        """dim - rank(M - mu*I)."""
        return matrix.dimension - self._fraction_free_rank([list(row) for row in matrix.shifted(mu).rows])

    @staticmethod
    def _fraction_free_rank(rows: list[list[int]]) -> int:
        # Bareiss elimination with full pivoting; entries stay exact minors
        n_rows = len(rows)
        n_columns = len(rows[0]) if rows else 0
        previous = 1
        rank = 0
        for k in range(min(n_rows, n_columns)):
            pivot_position = ExactLinearAlgebra._find_pivot(rows, k)
            if pivot_position is None:
                break
            pivot_row, pivot_column = pivot_position
            if pivot_row != k:
                rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            if pivot_column != k:
                for row in rows:
                    row[k], row[pivot_column] = row[pivot_column], row[k]
            pivot = rows[k][k]
            pivot_tail = rows[k][k + 1 :]
            for i in range(k + 1, n_rows):
                row = rows[i]
                factor = row[k]
                if factor == 0:
                    if pivot != previous:
                        row[k + 1 :] = [(pivot * value) // previous for value in row[k + 1 :]]
                else:
                    row[k + 1 :] = [
                        (pivot * value - factor * other) // previous for value, other in zip(row[k + 1 :], pivot_tail)
                    ]
                    row[k] = 0
            previous = pivot
            rank += 1
        return rank

    @staticmethod
    def _find_pivot(rows: list[list[int]], k: int) -> Optional[tuple[int, int]]:
        for i in range(k, len(rows)):
            if rows[i][k] != 0:
                return i, k
        for i in range(k, len(rows)):
            row = rows[i]
            for j in range(k + 1, len(row)):
                if row[j] != 0:
                    return i, j
        return None

    @staticmethod
    def _coefficient_bound(matrix: IntMatrix) -> int:
        # coefficient of λ^(n-k) is a signed sum of C(n,k) principal k-minors; Hadamard bounds each minor
        norms = sorted((math.isqrt(sum(value * value for value in row)) + 1 for row in matrix.rows), reverse=True)
        n = len(norms)
        bound = 1
        product = 1
        for k in range(1, n + 1):
            product *= norms[k - 1]
            bound = max(bound, math.comb(n, k) * product)
        return bound

    @staticmethod
    def _char_poly_mod_prime(rows: Sequence[Sequence[int]], prime: int) -> list[int]:
        n = len(rows)
        h = np.array([[value % prime for value in row] for row in rows], dtype=np.int64)

        # similarity reduction to upper Hessenberg form
        for j in range(n - 2):
            nonzero = np.flatnonzero(h[j + 1 :, j])
            if nonzero.size == 0:
                continue
            pivot = j + 1 + int(nonzero[0])
            if pivot != j + 1:
                h[[pivot, j + 1], :] = h[[j + 1, pivot], :]
                h[:, [pivot, j + 1]] = h[:, [j + 1, pivot]]
            inverse = pow(int(h[j + 1, j]), prime - 2, prime)
            multipliers = (h[j + 2 :, j] * inverse) % prime
            if not multipliers.any():
                continue
            h[j + 2 :, :] = (h[j + 2 :, :] - np.outer(multipliers, h[j + 1, :]) % prime) % prime
            h[:, j + 1] = (h[:, j + 1] + (h[:, j + 2 :] @ multipliers) % prime) % prime

        # p_m = (λ - h_mm) p_(m-1) - Σ_i h_(i,m) (Π h_(l,l-1)) p_(i-1)
        polys = np.zeros((n + 1, n + 1), dtype=np.int64)
        polys[0, 0] = 1
        for m in range(1, n + 1):
            t = m - 1
            current = np.zeros(n + 1, dtype=np.int64)
            current[1:] = polys[m - 1, :-1]
            current = (current - (int(h[t, t]) * polys[m - 1]) % prime) % prime
            if m > 1:
                weights = np.zeros(m - 1, dtype=np.int64)
                product = 1
                for i in range(m - 1, 0, -1):
                    product = (product * int(h[i, i - 1])) % prime
                    if product == 0:
                        break
                    weights[i - 1] = (int(h[i - 1, t]) * product) % prime
                correction = (weights @ polys[: m - 1]) % prime
                current = (current - correction) % prime
            polys[m] = current
        return [int(value) for value in polys[n]]
