from collections import Counter
from dataclasses import dataclass

from cocentralizer_spectra.finite_groups.domain.element_set import ElementSet


@dataclass(frozen=True)
class CentralizerFamily:
    """Distinct proper centralizers, grouped by descending cardinality."""

    centralizers: tuple[ElementSet, ...]
    cardinalities: tuple[int, ...]
    representatives: tuple[int, ...]

    def __post_init__(self) -> None:
        if not len(self.centralizers) == len(self.cardinalities) == len(self.representatives):
            raise ValueError("centralizers, cardinalities and representatives must align")

    def __len__(self) -> int:
        return len(self.centralizers)

    def cardinality_multiset(self) -> Counter:
        return Counter(self.cardinalities)

    def has_single_cardinality(self) -> bool:
        return len(set(self.cardinalities)) <= 1
