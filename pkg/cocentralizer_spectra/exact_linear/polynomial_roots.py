import logging
import math
from fractions import Fraction
from typing import Optional

from sympy import divisors

from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import (
    EigenvalueExpr,
    IntEigenvalue,
    PolyRootsEigenvalue,
    SurdPairEigenvalue,
)
from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exact_linear.domain.surd_value import SurdValue
from cocentralizer_spectra.exceptions import ComplexRootsError


class PolynomialRoots:
    """Linear deflation, monic quadratics and rational roots of integer polynomials."""

    ERROR_MSG_NEGATIVE_DISCRIMINANT = "Quadratic %s has negative discriminant %d"

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    @staticmethod
    def poly_div_linear(poly: BigPoly, mu: int) -> tuple[BigPoly, int]:
        """Divide out (λ - mu) as often as it divides exactly."""
        if poly.is_zero():
            raise ValueError("cannot deflate the zero polynomial")
        divisor = BigPoly.linear_root(mu)
        multiplicity = 0
        while poly.degree >= 1:
            quotient, remainder = poly.divmod_monic(divisor)
            if not remainder.is_zero():
                break
            poly = quotient
            multiplicity += 1
        return poly, multiplicity

    @staticmethod
    def factor_multiplicity(poly: BigPoly, factor: BigPoly) -> tuple[BigPoly, int]:
        """Divide out a monic factor as often as it divides exactly."""
        multiplicity = 0
        while poly.degree >= factor.degree >= 1:
            quotient, remainder = poly.divmod_monic(factor)
            if not remainder.is_zero():
                break
            poly = quotient
            multiplicity += 1
        return poly, multiplicity

    def solve_monic_quadratic(self, poly: BigPoly) -> SurdValue:
        if poly.degree != 2 or not poly.is_monic():
            raise ValueError(f"{poly} is not a monic quadratic")
        c, b = poly.coefficient(0), poly.coefficient(1)
        discriminant = b * b - 4 * c
        if discriminant < 0:
            self._logger.error(self.ERROR_MSG_NEGATIVE_DISCRIMINANT, poly.to_text(), discriminant)
            raise ComplexRootsError(self.ERROR_MSG_NEGATIVE_DISCRIMINANT % (poly.to_text(), discriminant))
        return SurdValue.normalized(-b, discriminant, 2)

    @staticmethod
    def rational_roots(poly: BigPoly) -> list[Fraction]:
        """Distinct rational roots by the rational-root test; intended for low-degree factors."""
        if poly.is_zero():
            raise ValueError("the zero polynomial has every root")
        roots: set[Fraction] = set()
        trailing_zeros = next(i for i, value in enumerate(poly.coefficients) if value != 0)
        if trailing_zeros:
            roots.add(Fraction(0))
            poly = BigPoly(poly.coefficients[trailing_zeros:])
        constant, leading = abs(poly.coefficient(0)), abs(poly.leading)
        if poly.degree >= 1:
            for numerator in divisors(constant):
                for denominator in divisors(leading):
                    for sign in (1, -1):
                        candidate = Fraction(sign * numerator, denominator)
                        if _evaluate_fraction(poly, candidate) == 0:
                            roots.add(candidate)
        return sorted(roots)

    @staticmethod
    def real_root_bound(poly: BigPoly) -> int:
        """For a monic real-rooted poly, every root satisfies |root| <= sqrt(Σ root²) <= this bound."""
        n = poly.degree
        if n < 1:
            return 0
        c1 = poly.coefficient(n - 1)
        c2 = poly.coefficient(n - 2) if n >= 2 else 0
        return math.isqrt(max(c1 * c1 - 2 * c2, 0)) + 1

    def exact_spectrum(self, poly: BigPoly, source: str = "computed") -> SpectrumSpec:
        """
        Spectrum of a monic real-rooted characteristic polynomial.

        Integer roots are deflated; a remaining quadratic becomes a surd pair and any other
        remainder is kept as a PolyRoots factor.
        """
        entries: list[tuple[EigenvalueExpr, int]] = []
        bound = self.real_root_bound(poly)
        remaining = poly
        for candidate in range(-bound, bound + 1):
            if remaining.degree < 1:
                break
            if remaining.evaluate(candidate) != 0:
                continue
            remaining, multiplicity = self.poly_div_linear(remaining, candidate)
            entries.append((IntEigenvalue(candidate), multiplicity))
        if remaining.degree == 2:
            entries.append((SurdPairEigenvalue(self.solve_monic_quadratic(remaining)), 1))
        elif remaining.degree >= 1:
            entries.append((PolyRootsEigenvalue(remaining), 1))
        return SpectrumSpec(tuple(entries), source=source)


def _evaluate_fraction(poly: BigPoly, value: Fraction) -> Fraction:
    result = Fraction(0)
    for coefficient in reversed(poly.coefficients):
        result = result * value + coefficient
    return result
