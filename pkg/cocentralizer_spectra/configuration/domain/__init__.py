from .verification_settings import VerificationSettings

__all__ = ["VerificationSettings"]
