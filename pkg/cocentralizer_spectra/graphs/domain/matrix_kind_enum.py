from enum import Enum


class MatrixKindEnum(str, Enum):
    D = "D"
    DL = "DL"
    DQ = "DQ"

    @classmethod
    def from_text(cls, text: str) -> "MatrixKindEnum":
        return cls(text.strip().upper())
