from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class ElementSet:
    """Strictly increasing element indices into a FiniteGroup."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(int(member) for member in self.members)
        if any(left >= right for left, right in zip(members, members[1:])):
            raise ValueError("ElementSet members must be strictly increasing")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "ElementSet":
        return cls(tuple(sorted(set(int(index) for index in indices))))

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, index: object) -> bool:
        return index in set(self.members)

    def issubset(self, other: "ElementSet") -> bool:
        return set(self.members) <= set(other.members)
