import logging
from typing import Optional

from cocentralizer_spectra.constants import DEFAULT_CAYLEY_TABLE_MAX_ORDER
from cocentralizer_spectra.exceptions import InvalidGroupSpecError
from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.finite_groups.domain.metacyclic_normal_form_group import MetacyclicNormalFormGroup
from cocentralizer_spectra.finite_groups.interfaces.group_builder_interface import IGroupBuilder


class MetacyclicPresentationGroupBuilder(IGroupBuilder):
    """
    Realizes the four presentation families by normal-form rewriting.

      Q4N   <x, y | x^2n = 1, y^2 = x^n, y x y^-1 = x^-1>
      D2M   <a, b | a^m = b^2 = 1, b a b^-1 = a^-1>
      QD2N  <a, b | a^(2^(n-1)) = b^2 = 1, b a b^-1 = a^(2^(n-2) - 1)>
      M2MN  <a, b | a^m = b^2n = 1, b a b^-1 = a^-1>
    """

    LOG_MSG_BUILDING = "Building %s by normal forms (cyclic order %d, top order %d, twist %d, top power %d)"

    SUPPORTED_FAMILIES = frozenset(
        {GroupFamilyEnum.Q4N, GroupFamilyEnum.D2M, GroupFamilyEnum.QD2N, GroupFamilyEnum.M2MN}
    )

    def __init__(
        self,
        cayley_table_max_order: Optional[int] = DEFAULT_CAYLEY_TABLE_MAX_ORDER,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._cayley_table_max_order = cayley_table_max_order
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def supports(self, family: GroupFamilyEnum) -> bool:
        return family in self.SUPPORTED_FAMILIES

    def build_group(self, spec: GroupSpec) -> FiniteGroup:
        if not self.supports(spec.family):
            raise InvalidGroupSpecError(f"{self.__class__.__name__} cannot build {spec.family.value}")
        cyclic_order, top_order, twist, top_power, names = self._presentation(spec)
        self._logger.debug(self.LOG_MSG_BUILDING, spec.label, cyclic_order, top_order, twist, top_power)
        return MetacyclicNormalFormGroup(
            spec,
            cyclic_order=cyclic_order,
            top_order=top_order,
            twist=twist,
            top_power=top_power,
            generator_names=names,
            cayley_table_max_order=self._cayley_table_max_order,
        )

    @staticmethod
    def _presentation(spec: GroupSpec) -> tuple[int, int, int, int, tuple[str, str]]:
        if spec.family is GroupFamilyEnum.Q4N:
            return 2 * spec.n, 2, -1, spec.n, ("x", "y")
        if spec.family is GroupFamilyEnum.D2M:
            return spec.m, 2, -1, 0, ("a", "b")
        if spec.family is GroupFamilyEnum.QD2N:
            return 1 << (spec.n - 1), 2, (1 << (spec.n - 2)) - 1, 0, ("a", "b")
        return spec.m, 2 * spec.n, -1, 0, ("a", "b")
