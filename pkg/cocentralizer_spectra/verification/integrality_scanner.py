import logging
from typing import Iterable, Iterator, Optional

from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import IntEigenvalue
from cocentralizer_spectra.closed_forms.domain.graph_shape import DegenerateShape
from cocentralizer_spectra.closed_forms.family_shapes import FamilyShapes
from cocentralizer_spectra.closed_forms.integrality_conditions import IntegralityConditions
from cocentralizer_spectra.constants import DEFAULT_SCAN_CROSS_CHECK_ORDER
from cocentralizer_spectra.exceptions import DegenerateSpecError
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.verification.domain.verification_report import ScanReport, ScanRow
from cocentralizer_spectra.verification.interfaces.family_verifier_interface import IFamilyVerifier


class IntegralityScanner:
    """
    Evaluates a family's integrality condition over a parameter range.

    The scanned parameter is n for Q4N and QD2N, m for D2M and M2MN (n held fixed), and k for PSL2.
    Small instances are cross-checked against the exact spectrum when a verifier is supplied.
    """

    LOG_MSG_SCAN = "Scanning %s %s over %d..%d (cross-check up to order %d)"
    LOG_MSG_DISAGREEMENT = "Integrality condition disagrees with the exact spectrum for %s %s"

    def __init__(
        self,
        verifier: Optional[IFamilyVerifier] = None,
        scan_cross_check_order: int = DEFAULT_SCAN_CROSS_CHECK_ORDER,
        exact_dimension_cap: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._verifier = verifier
        self._scan_cross_check_order = scan_cross_check_order
        self._exact_dimension_cap = exact_dimension_cap
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    @staticmethod
    def spec_for(family: GroupFamilyEnum, parameter: int, fixed_n: int = 1) -> GroupSpec:
        family = GroupFamilyEnum(family)
        if family is GroupFamilyEnum.Q4N:
            return GroupSpec.q4n(parameter)
        if family is GroupFamilyEnum.D2M:
            return GroupSpec.d2m(parameter)
        if family is GroupFamilyEnum.QD2N:
            return GroupSpec.qd2n(parameter)
        if family is GroupFamilyEnum.M2MN:
            return GroupSpec.m2mn(parameter, fixed_n)
        return GroupSpec.psl2(parameter)

    def iter_integrality(
        self,
        family: GroupFamilyEnum,
        kind: MatrixKindEnum,
        parameters: Iterable[int],
        fixed_n: int = 1,
    ) -> Iterator[ScanRow]:
        """One ScanRow per parameter, in the order given; degenerate parameters get integral=None."""
        kind = MatrixKindEnum(kind)
        for parameter in parameters:
            spec = self.spec_for(family, parameter, fixed_n)
            try:
                verdict = IntegralityConditions.integrality_conditions(spec, kind)
            except DegenerateSpecError as ex:
                yield ScanRow(parameter=parameter, integral=None, witness=str(ex))
                continue
            computed_integral = self._exact_integrality(spec, kind)
            if computed_integral is None:
                yield ScanRow(parameter=parameter, integral=verdict.integral, witness=verdict.witness)
                continue
            agrees = computed_integral == verdict.integral
            if not agrees:
                self._logger.warning(self.LOG_MSG_DISAGREEMENT, spec.label, kind.value)
            yield ScanRow(
                parameter=parameter,
                integral=verdict.integral,
                witness=verdict.witness,
                cross_checked=True,
                agrees=agrees,
            )

    def scan_integrality(
        self,
        family: GroupFamilyEnum,
        kind: MatrixKindEnum,
        parameters: range,
        fixed_n: int = 1,
    ) -> ScanReport:
        family = GroupFamilyEnum(family)
        kind = MatrixKindEnum(kind)
        if len(parameters):
            self._logger.info(
                self.LOG_MSG_SCAN, family.value, kind.value, parameters[0], parameters[-1], self._scan_cross_check_order
            )
        rows = tuple(self.iter_integrality(family, kind, parameters, fixed_n))
        return ScanReport(family=family.value, kind=kind, rows=rows)

    def _exact_integrality(self, spec: GroupSpec, kind: MatrixKindEnum) -> Optional[bool]:
        if self._verifier is None or spec.order > self._scan_cross_check_order:
            return None
        shape = FamilyShapes.family_cocentralizer_shape(spec)
        if isinstance(shape, DegenerateShape):
            return None
        if self._exact_dimension_cap is not None and shape.vertex_count > self._exact_dimension_cap:
            return None
        spectrum = self._verifier.computed_spectrum(spec, kind)
        if spectrum is None:
            return None
        return all(isinstance(expression, IntEigenvalue) for expression, _ in spectrum.entries)
