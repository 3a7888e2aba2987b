from .report_records import (
    CLAIM_CSV_COLUMNS,
    GROUP_CSV_COLUMNS,
    LEMMA1_CSV_COLUMNS,
    REPORT_CSV_COLUMNS,
    SCAN_CSV_COLUMNS,
    SPECTRUM_CSV_COLUMNS,
    ClaimCheckRecord,
    GroupSummaryRecord,
    Lemma1Record,
    ScanRowRecord,
    SpectrumEntryRecord,
    SpectrumRecord,
    VerificationReportRecord,
)
from .run_config import RunConfig, parse_range

__all__ = [
    "CLAIM_CSV_COLUMNS",
    "ClaimCheckRecord",
    "GROUP_CSV_COLUMNS",
    "GroupSummaryRecord",
    "LEMMA1_CSV_COLUMNS",
    "Lemma1Record",
    "REPORT_CSV_COLUMNS",
    "RunConfig",
    "SCAN_CSV_COLUMNS",
    "ScanRowRecord",
    "SpectrumEntryRecord",
    "SpectrumRecord",
    "VerificationReportRecord",
    "parse_range",
]
