from abc import ABC, abstractmethod

from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec


class IGroupBuilder(ABC):
    @abstractmethod
    def supports(self, family: GroupFamilyEnum) -> bool:
        """
        Whether this builder can realize the given family.
        """
        pass

    @abstractmethod
    def build_group(self, spec: GroupSpec) -> FiniteGroup:
        """
        Builds the group described by spec.

        Args:
            spec: validated family tag and parameters

        Returns:
            FiniteGroup of the family's order with its multiplication oracle
        """
        pass
