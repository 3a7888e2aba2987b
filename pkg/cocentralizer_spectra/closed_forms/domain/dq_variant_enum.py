from enum import Enum


class DqVariantEnum(str, Enum):
    """Readings of the third signless Laplacian class for PSL(2, 2^k)."""

    STATEMENT_TEXT = "StatementText"
    PROOF_BLOCKS = "ProofBlocks"
