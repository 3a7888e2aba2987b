from enum import Enum


class GroupFamilyEnum(str, Enum):
    Q4N = "Q4N"
    D2M = "D2M"
    QD2N = "QD2N"
    M2MN = "M2MN"
    PSL2 = "PSL2"

    @classmethod
    def from_text(cls, text: str) -> "GroupFamilyEnum":
        return cls(text.strip().upper())
