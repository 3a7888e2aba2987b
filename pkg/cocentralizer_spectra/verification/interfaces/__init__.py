from .family_verifier_interface import IFamilyVerifier

__all__ = ["IFamilyVerifier"]
