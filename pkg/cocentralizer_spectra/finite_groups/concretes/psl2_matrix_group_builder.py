import itertools
import logging
from typing import Optional

import numpy as np

from cocentralizer_spectra.constants import DEFAULT_CAYLEY_TABLE_MAX_ORDER
from cocentralizer_spectra.exceptions import InvalidGroupSpecError
from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.finite_groups.domain.special_linear_group import SpecialLinearGF2kGroup
from cocentralizer_spectra.finite_groups.galois.gf2k_arithmetic import Gf2kArithmetic
from cocentralizer_spectra.finite_groups.interfaces.group_builder_interface import IGroupBuilder


class Psl2MatrixGroupBuilder(IGroupBuilder):
    """Enumerates the determinant-one 2x2 matrices over GF(2^k)."""

    LOG_MSG_ENUMERATED = "Enumerated %d matrices of determinant one over GF(2^%d) (modulus %s)"

    def __init__(
        self,
        cayley_table_max_order: Optional[int] = DEFAULT_CAYLEY_TABLE_MAX_ORDER,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._cayley_table_max_order = cayley_table_max_order
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def supports(self, family: GroupFamilyEnum) -> bool:
        return family is GroupFamilyEnum.PSL2

    def build_group(self, spec: GroupSpec) -> FiniteGroup:
        if not self.supports(spec.family):
            raise InvalidGroupSpecError(f"{self.__class__.__name__} cannot build {spec.family.value}")
        field = Gf2kArithmetic.gf_build(spec.k)
        mul = Gf2kArithmetic.multiplication_table(field)
        q = field.size
        # in characteristic 2, det = ad + bc
        entries = np.array(
            [
                (a, b, c, d)
                for a, b, c, d in itertools.product(range(q), repeat=4)
                if mul[a, d] ^ mul[b, c] == 1
            ],
            dtype=np.int64,
        )
        self._logger.debug(self.LOG_MSG_ENUMERATED, entries.shape[0], spec.k, field.modulus_text())
        return SpecialLinearGF2kGroup(spec, field, mul, entries, self._cayley_table_max_order)
