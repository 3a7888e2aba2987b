from .verification_runner import VerificationRunner

__all__ = ["VerificationRunner"]
