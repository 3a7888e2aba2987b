import logging
from typing import Optional

import numpy as np

from cocentralizer_spectra.exceptions import NoProperCentralizersError
from cocentralizer_spectra.finite_groups.domain.centralizer_family import CentralizerFamily
from cocentralizer_spectra.finite_groups.domain.element_set import ElementSet
from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup


class CentralizerCalculator:
    """Exhaustive centers and centralizers over a group's multiplication oracle."""

    LOG_MSG_FAMILY = "%s has center of order %d and %d distinct proper centralizers"
    ERROR_MSG_ABELIAN = "%s is abelian and has no proper centralizers"

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def center(self, group: FiniteGroup) -> ElementSet:
        central = [element for element in range(group.order) if group.commuting_mask(element).all()]
        return ElementSet(tuple(central))

    def centralizer(self, group: FiniteGroup, element: int) -> ElementSet:
        return ElementSet(tuple(int(index) for index in np.flatnonzero(group.commuting_mask(element))))

    def proper_centralizer_family(self, group: FiniteGroup) -> CentralizerFamily:
        """
        Deduplicated centralizers of the non-central elements.

        Centralizers keep discovery order within a cardinality class; classes are ordered by
        descending cardinality.
        """
        seen: dict[bytes, int] = {}
        discovered: list[tuple[np.ndarray, int]] = []
        central_count = 0
        for element in range(group.order):
            mask = group.commuting_mask(element)
            if mask.all():
                central_count += 1
                continue
            key = np.packbits(mask).tobytes()
            if key not in seen:
                seen[key] = len(discovered)
                discovered.append((mask, element))

        if not discovered:
            self._logger.error(self.ERROR_MSG_ABELIAN, group.spec.label)
            raise NoProperCentralizersError(self.ERROR_MSG_ABELIAN % group.spec.label)

        sets = [
            (ElementSet(tuple(int(index) for index in np.flatnonzero(mask))), representative)
            for mask, representative in discovered
        ]
        sets.sort(key=lambda pair: -pair[0].cardinality)
        self._logger.debug(self.LOG_MSG_FAMILY, group.spec.label, central_count, len(sets))
        return CentralizerFamily(
            centralizers=tuple(element_set for element_set, _ in sets),
            cardinalities=tuple(element_set.cardinality for element_set, _ in sets),
            representatives=tuple(representative for _, representative in sets),
        )
