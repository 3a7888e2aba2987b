from .family_verifier import CocentralizerStructure, FamilyVerifier

__all__ = ["CocentralizerStructure", "FamilyVerifier"]
