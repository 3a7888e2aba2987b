from dataclasses import dataclass

from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix


@dataclass(frozen=True)
class QuotientMatrix3:
    """3x3 block-row-sum matrix of an equitable tripartition."""

    entries: tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

    def __post_init__(self) -> None:
        if len(self.entries) != 3 or any(len(row) != 3 for row in self.entries):
            raise ValueError("QuotientMatrix3 must be 3x3")

    def row_sums(self) -> tuple[int, int, int]:
        return tuple(sum(row) for row in self.entries)  # type: ignore[return-value]

    def as_int_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.entries)

    def char_poly(self) -> BigPoly:
        """λ³ - tr·λ² + (sum of principal 2-minors)·λ - det."""
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        trace = a + e + i
        minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
        determinant = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        return BigPoly((-determinant, minors, -trace, 1))
