import logging
from typing import Optional, Sequence

from cocentralizer_spectra.exceptions import InvalidGroupSpecError
from cocentralizer_spectra.finite_groups.concretes.metacyclic_presentation_group_builder import (
    MetacyclicPresentationGroupBuilder,
)
from cocentralizer_spectra.finite_groups.concretes.psl2_matrix_group_builder import Psl2MatrixGroupBuilder
from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.finite_groups.interfaces.group_builder_interface import IGroupBuilder


class FamilyGroupBuilder(IGroupBuilder):
    """Dispatches a GroupSpec to the first registered builder supporting its family."""

    def __init__(
        self,
        builders: Optional[Sequence[IGroupBuilder]] = None,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._builders: list[IGroupBuilder] = list(
            builders or (MetacyclicPresentationGroupBuilder(), Psl2MatrixGroupBuilder())
        )
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def supports(self, family: GroupFamilyEnum) -> bool:
        return any(builder.supports(family) for builder in self._builders)

    def build_group(self, spec: GroupSpec) -> FiniteGroup:
        for builder in self._builders:
            if builder.supports(spec.family):
                group = builder.build_group(spec)
                if group.order != spec.order:
                    raise InvalidGroupSpecError(
                        f"{spec.label} was realized with order {group.order}, expected {spec.order}"
                    )
                self._logger.info("Built %s of order %d", spec.label, group.order)
                return group
        raise InvalidGroupSpecError(f"No group builder registered for {spec.family.value}")
