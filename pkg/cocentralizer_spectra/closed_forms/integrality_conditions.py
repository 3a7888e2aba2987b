import math
from dataclasses import dataclass

from cocentralizer_spectra.closed_forms.domain.graph_shape import DegenerateShape
from cocentralizer_spectra.closed_forms.family_shapes import FamilyShapes
from cocentralizer_spectra.closed_forms.psl_closed_forms import PslClosedForms
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exact_linear.polynomial_roots import PolynomialRoots
from cocentralizer_spectra.exceptions import DegenerateSpecError
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum


@dataclass(frozen=True)
class IntegralityVerdict:
    integral: bool
    condition: str
    witness: str


class IntegralityConditions:
    """Closed-form integrality tests for each family and matrix kind."""

    @staticmethod
    def is_perfect_square(value: int) -> bool:
        return value >= 0 and math.isqrt(value) ** 2 == value

    @staticmethod
    def integrality_conditions(spec: GroupSpec, kind: MatrixKindEnum) -> IntegralityVerdict:
        shape = FamilyShapes.family_cocentralizer_shape(spec)
        if isinstance(shape, DegenerateShape):
            raise DegenerateSpecError(shape.reason)
        kind = MatrixKindEnum(kind)
        if kind is MatrixKindEnum.DL:
            return IntegralityVerdict(True, "distance Laplacian spectrum is always integral", "unconditional")
        if spec.family is GroupFamilyEnum.PSL2:
            cubic = (
                PslClosedForms.distance_cubic_claimed(spec.k)
                if kind is MatrixKindEnum.D
                else PslClosedForms.psl_dq_quotient(spec.k).char_poly()
            )
            return IntegralityConditions._cubic_verdict(cubic)
        if kind is MatrixKindEnum.D:
            return IntegralityConditions._distance_verdict(spec)
        return IntegralityConditions._signless_verdict(spec)

    @staticmethod
    def _distance_verdict(spec: GroupSpec) -> IntegralityVerdict:
        if spec.family in (GroupFamilyEnum.D2M, GroupFamilyEnum.M2MN) and spec.m % 2 == 0:
            m = spec.m
            value = m * m - 2 * m + 4
            root = math.isqrt(value)
            integral = root * root == value and root % 2 == 0
            return IntegralityVerdict(integral, f"√(m²-2m+4) is an even integer; m²-2m+4={value}", _root_witness(value))
        if spec.family is GroupFamilyEnum.QD2N:
            n = spec.n
            value = 2 ** (2 * n - 4) - 2 ** (n - 2) + 1
            condition = f"2^(2n-4)-2^(n-2)+1={value} is a perfect square"
        else:
            n = spec.n if spec.family is GroupFamilyEnum.Q4N else spec.m
            value = n * n - n + 1
            condition = f"n²-n+1={value} is a perfect square"
        return IntegralityVerdict(IntegralityConditions.is_perfect_square(value), condition, _root_witness(value))

    @staticmethod
    def _signless_verdict(spec: GroupSpec) -> IntegralityVerdict:
        if spec.family in (GroupFamilyEnum.D2M, GroupFamilyEnum.M2MN) and spec.m % 2 == 0:
            m = spec.m
            linear, discriminant = 5 * m // 2 - 3, 9 * m * m // 4 - 7 * m + 9
        elif spec.family is GroupFamilyEnum.QD2N:
            leaves = 2 ** (spec.n - 2)
            linear, discriminant = 5 * leaves - 3, 9 * 2 ** (2 * spec.n - 4) - 14 * leaves + 9
        else:
            n = spec.n if spec.family is GroupFamilyEnum.Q4N else spec.m
            linear, discriminant = 5 * n - 3, 9 * n * n - 14 * n + 9
        root = math.isqrt(discriminant)
        integral = root * root == discriminant and (linear + root) % 2 == 0
        return IntegralityVerdict(
            integral,
            f"{linear} ± √{discriminant} is even",
            _root_witness(discriminant),
        )

    @staticmethod
    def _cubic_verdict(cubic: BigPoly) -> IntegralityVerdict:
        remaining = cubic
        roots: list[str] = []
        for root in PolynomialRoots.rational_roots(cubic):
            if root.denominator != 1:
                continue
            remaining, multiplicity = PolynomialRoots.poly_div_linear(remaining, root.numerator)
            roots.extend([str(root.numerator)] * multiplicity)
        integral = remaining.degree == 0
        witness = f"{cubic.to_text()}; integer roots [{', '.join(roots)}]"
        return IntegralityVerdict(integral, "cubic splits over the integers", witness)


def _root_witness(value: int) -> str:
    root = math.isqrt(value)
    if root * root == value:
        return f"√{value}={root}"
    return f"{value} is not a perfect square ({root}² < {value} < {root + 1}²)"
