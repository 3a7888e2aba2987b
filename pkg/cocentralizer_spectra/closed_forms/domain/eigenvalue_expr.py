from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exact_linear.domain.surd_value import SurdValue


@dataclass(frozen=True)
class IntEigenvalue:
    value: int

    value_kind = "int"

    @property
    def root_count(self) -> int:
        return 1

    def factor(self) -> BigPoly:
        return BigPoly.linear_root(self.value)

    def root_sum(self) -> Fraction:
        return Fraction(self.value)

    def numeric_values(self) -> list[float]:
        return [float(self.value)]

    def to_text(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class SurdPairEigenvalue:
    """Both conjugates of a SurdValue."""

    surd: SurdValue

    value_kind = "surd"

    @property
    def root_count(self) -> int:
        return 2

    def factor(self) -> BigPoly:
        return self.surd.quadratic()

    def root_sum(self) -> Fraction:
        return Fraction(2 * self.surd.p, self.surd.q)

    def numeric_values(self) -> list[float]:
        return list(self.surd.numeric_values())

    def to_text(self) -> str:
        return self.surd.to_text()


@dataclass(frozen=True)
class PolyRootsEigenvalue:
    """All roots of a monic integer polynomial."""

    poly: BigPoly

    value_kind = "poly_roots"

    def __post_init__(self) -> None:
        if not self.poly.is_monic() or self.poly.degree < 1:
            raise ValueError("PolyRootsEigenvalue requires a monic polynomial of positive degree")

    @property
    def root_count(self) -> int:
        return self.poly.degree

    def factor(self) -> BigPoly:
        return self.poly

    def root_sum(self) -> Fraction:
        return Fraction(-self.poly.coefficient(self.poly.degree - 1))

    def numeric_values(self) -> list[float]:
        descending = [float(value) for value in reversed(self.poly.coefficients)]
        return sorted(float(np.real(root)) for root in np.roots(descending))

    def to_text(self) -> str:
        return f"roots({self.poly.to_text()})"


EigenvalueExpr = Union[IntEigenvalue, SurdPairEigenvalue, PolyRootsEigenvalue]
