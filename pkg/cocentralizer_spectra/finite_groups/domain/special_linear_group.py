from typing import Optional

import numpy as np

from cocentralizer_spectra.finite_groups.domain.field_gf2k import FieldGF2k
from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec


class SpecialLinearGF2kGroup(FiniteGroup):
    """
    SL(2, 2^k) as determinant-one 2x2 matrices [[a, b], [c, d]].

    A matrix is coded as a + b*q + c*q^2 + d*q^3. In characteristic 2 the center is trivial,
    so these matrices are also the elements of PSL(2, 2^k).
    """

    def __init__(
        self,
        spec: GroupSpec,
        field: FieldGF2k,
        multiplication_table: np.ndarray,
        entries: np.ndarray,
        cayley_table_max_order: Optional[int] = None,
    ) -> None:
        self._field = field
        self._mul = multiplication_table
        self._q = field.size
        self._entries = entries
        q = self._q
        codes = entries[:, 0] + q * entries[:, 1] + q * q * entries[:, 2] + q * q * q * entries[:, 3]
        self._code_lookup = np.full(q**4, -1, dtype=np.int64)
        self._code_lookup[codes] = np.arange(entries.shape[0], dtype=np.int64)
        identity_code = 1 + q * q * q
        super().__init__(spec, codes.astype(np.int64), int(self._code_lookup[identity_code]), cayley_table_max_order)

    @property
    def field(self) -> FieldGF2k:
        return self._field

    def matrix_of(self, element: int) -> tuple[tuple[int, int], tuple[int, int]]:
        a, b, c, d = (int(value) for value in self._entries[element])
        return (a, b), (c, d)

    def index_of_matrix(self, matrix: tuple[tuple[int, int], tuple[int, int]]) -> int:
        (a, b), (c, d) = matrix
        q = self._q
        index = int(self._code_lookup[a + q * b + q * q * c + q * q * q * d])
        if index < 0:
            raise KeyError(matrix)
        return index

    def element_label(self, element: int) -> str:
        (a, b), (c, d) = self.matrix_of(element)
        return f"[[{a},{b}],[{c},{d}]]"

    def _encode(self, a, b, c, d):
        q = self._q
        return self._code_lookup[a + q * b + q * q * c + q * q * q * d]

    def _multiply(self, left: int, right: int) -> int:
        mul = self._mul
        a, b, c, d = (int(value) for value in self._entries[left])
        e, f, g, h = (int(value) for value in self._entries[right])
        return int(
            self._encode(
                int(mul[a, e] ^ mul[b, g]),
                int(mul[a, f] ^ mul[b, h]),
                int(mul[c, e] ^ mul[d, g]),
                int(mul[c, f] ^ mul[d, h]),
            )
        )

    def _compute_left_products(self, element: int) -> np.ndarray:
        mul = self._mul
        a, b, c, d = (int(value) for value in self._entries[element])
        A, B, C, D = (self._entries[:, column] for column in range(4))
        return self._encode(
            mul[a][A] ^ mul[b][C],
            mul[a][B] ^ mul[b][D],
            mul[c][A] ^ mul[d][C],
            mul[c][B] ^ mul[d][D],
        )

    def _compute_right_products(self, element: int) -> np.ndarray:
        mul = self._mul
        a, b, c, d = (int(value) for value in self._entries[element])
        A, B, C, D = (self._entries[:, column] for column in range(4))
        return self._encode(
            mul[A, a] ^ mul[B, c],
            mul[A, b] ^ mul[B, d],
            mul[C, a] ^ mul[D, c],
            mul[C, b] ^ mul[D, d],
        )
