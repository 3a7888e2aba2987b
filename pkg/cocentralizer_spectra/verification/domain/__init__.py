from .outcome_enum import OutcomeEnum
from .verification_job import VerificationJob
from .verification_report import (
    ClaimCheckReport,
    MismatchDetail,
    ScanReport,
    ScanRow,
    VariantOutcome,
    VerificationReport,
)

__all__ = [
    "ClaimCheckReport",
    "MismatchDetail",
    "OutcomeEnum",
    "ScanReport",
    "ScanRow",
    "VariantOutcome",
    "VerificationJob",
    "VerificationReport",
]
