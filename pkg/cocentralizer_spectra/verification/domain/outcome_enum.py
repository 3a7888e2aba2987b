from enum import Enum


class OutcomeEnum(str, Enum):
    EXACT_MATCH = "ExactMatch"
    MISMATCH = "Mismatch"
    DEGENERATE = "Degenerate"
