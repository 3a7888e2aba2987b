from collections import Counter
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import (
    EigenvalueExpr,
    IntEigenvalue,
    PolyRootsEigenvalue,
    SurdPairEigenvalue,
)
from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.verification.domain.verification_report import (
    ClaimCheckReport,
    ScanRow,
    VerificationReport,
)

REPORT_CSV_COLUMNS = (
    "family",
    "params",
    "kind",
    "shape",
    "outcome",
    "mismatch",
    "charpoly",
    "spectrum",
    "claimed_spectrum",
    "numeric_residual",
    "exact_path",
    "variants",
    "notes",
)

SCAN_CSV_COLUMNS = ("family", "kind", "parameter", "integral", "witness", "cross_checked", "agrees")

GROUP_CSV_COLUMNS = ("family", "params", "order", "center_size", "centralizer_count", "cardinalities")

CLAIM_CSV_COLUMNS = ("family", "params", "claim", "outcome", "computed", "claimed", "notes")

LEMMA1_CSV_COLUMNS = ("parts", "holds")

SPECTRUM_CSV_COLUMNS = ("family", "params", "kind", "shape", "outcome", "charpoly", "spectrum", "numeric", "notes")


class ReportRecord(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def csv_row(self) -> dict[str, str]:
        """Flat string cells; nested values are rendered through their text form."""
        row: dict[str, str] = {}
        for name, value in self.model_dump(mode="json").items():
            row[name] = _cell(getattr(self, name), value)
        return row

    def text_line(self) -> str:
        return " | ".join(self.csv_row().values())


class SpectrumEntryRecord(ReportRecord):
    """One eigenvalue expression: int p; surd (p ± √d)/q; poly_roots with constant-first coefficients."""

    value_kind: Literal["int", "surd", "poly_roots"]
    p: Optional[int] = None
    d: Optional[int] = None
    q: Optional[int] = None
    mult: int
    coefficients: Optional[list[int]] = None
    text: str

    @classmethod
    def from_expression(cls, expression: EigenvalueExpr, multiplicity: int) -> "SpectrumEntryRecord":
        if isinstance(expression, IntEigenvalue):
            return cls(value_kind="int", p=expression.value, d=0, q=1, mult=multiplicity, text=expression.to_text())
        if isinstance(expression, SurdPairEigenvalue):
            surd = expression.surd
            return cls(value_kind="surd", p=surd.p, d=surd.d, q=surd.q, mult=multiplicity, text=expression.to_text())
        assert isinstance(expression, PolyRootsEigenvalue)
        return cls(
            value_kind="poly_roots",
            mult=multiplicity,
            coefficients=list(expression.poly.coefficients),
            text=expression.to_text(),
        )

    def __str__(self) -> str:
        return self.text if self.mult == 1 else f"{self.text}×{self.mult}"


class VerificationReportRecord(ReportRecord):
    family: str
    params: dict[str, int]
    kind: str
    shape: str
    claimed_shape: Optional[str] = None
    outcome: str
    mismatch: Optional[str] = None
    charpoly: Optional[str] = None
    charpoly_coefficients: Optional[list[int]] = None
    spectrum: Optional[list[SpectrumEntryRecord]] = None
    claimed_spectrum: Optional[list[SpectrumEntryRecord]] = None
    numeric_residual: Optional[float] = None
    exact_path: Optional[str] = None
    variants: dict[str, str] = {}
    notes: list[str] = []

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerificationReportRecord":
        return cls(
            family=report.spec.family.value,
            params=report.spec.params,
            kind=report.kind.value,
            shape=report.shape.to_text(),
            claimed_shape=report.claimed_shape.to_text() if report.claimed_shape is not None else None,
            outcome=report.outcome.value,
            mismatch=report.mismatch.to_text() if report.mismatch else report.degenerate_reason,
            charpoly=report.computed_charpoly.to_text() if report.computed_charpoly is not None else None,
            charpoly_coefficients=(
                list(report.computed_charpoly.coefficients) if report.computed_charpoly is not None else None
            ),
            spectrum=spectrum_records(report.computed_spectrum),
            claimed_spectrum=spectrum_records(report.claimed_spectrum),
            numeric_residual=report.numeric_residual,
            exact_path=report.exact_path,
            variants={variant.variant.value: variant.outcome.value for variant in report.variants},
            notes=list(report.notes),
        )

    def csv_row(self) -> dict[str, str]:
        row = super().csv_row()
        row.pop("claimed_shape")
        row.pop("charpoly_coefficients")
        return row


class SpectrumRecord(ReportRecord):
    family: str
    params: dict[str, int]
    kind: str
    shape: str
    outcome: str
    charpoly: Optional[str] = None
    spectrum: Optional[list[SpectrumEntryRecord]] = None
    numeric: list[float] = []
    notes: list[str] = []

    @classmethod
    def from_report(cls, report: VerificationReport) -> "SpectrumRecord":
        notes = list(report.notes)
        if report.degenerate_reason:
            notes.insert(0, report.degenerate_reason)
        return cls(
            family=report.spec.family.value,
            params=report.spec.params,
            kind=report.kind.value,
            shape=report.shape.to_text(),
            outcome=report.outcome.value,
            charpoly=report.computed_charpoly.to_text() if report.computed_charpoly is not None else None,
            spectrum=spectrum_records(report.computed_spectrum),
            numeric=list(report.numeric_values),
            notes=notes,
        )


class GroupSummaryRecord(ReportRecord):
    family: str
    params: dict[str, int]
    order: int
    center_size: int
    centralizer_count: int
    cardinalities: dict[int, int]

    @classmethod
    def from_counts(cls, spec: GroupSpec, order: int, center_size: int, counts: Counter) -> "GroupSummaryRecord":
        return cls(
            family=spec.family.value,
            params=spec.params,
            order=order,
            center_size=center_size,
            centralizer_count=sum(counts.values()),
            cardinalities=dict(sorted(counts.items(), reverse=True)),
        )


class ClaimCheckRecord(ReportRecord):
    family: str
    params: dict[str, int]
    claim: str
    outcome: str
    computed: str
    claimed: str
    notes: list[str] = []

    @classmethod
    def from_report(cls, report: ClaimCheckReport) -> "ClaimCheckRecord":
        return cls(
            family=report.spec.family.value,
            params=report.spec.params,
            claim=report.claim,
            outcome=report.outcome.value,
            computed=report.computed,
            claimed=report.claimed,
            notes=list(report.notes),
        )


class ScanRowRecord(ReportRecord):
    family: str
    kind: str
    parameter: int
    integral: Optional[bool] = None
    witness: str
    cross_checked: bool = False
    agrees: Optional[bool] = None

    @classmethod
    def from_row(cls, family: str, kind: MatrixKindEnum, row: ScanRow) -> "ScanRowRecord":
        return cls(
            family=family,
            kind=MatrixKindEnum(kind).value,
            parameter=row.parameter,
            integral=row.integral,
            witness=row.witness,
            cross_checked=row.cross_checked,
            agrees=row.agrees,
        )


class Lemma1Record(ReportRecord):
    parts: list[int]
    holds: bool


def spectrum_records(spectrum: Optional[SpectrumSpec]) -> Optional[list[SpectrumEntryRecord]]:
    if spectrum is None:
        return None
    return [SpectrumEntryRecord.from_expression(expression, multiplicity) for expression, multiplicity in spectrum.entries]


def _cell(raw: object, dumped: object) -> str:
    if raw is None:
        return ""
    if isinstance(raw, list) and raw and isinstance(raw[0], SpectrumEntryRecord):
        return "{" + ", ".join(str(entry) for entry in raw) + "}"
    if isinstance(raw, dict):
        return ";".join(f"{key}={value}" for key, value in raw.items())
    if isinstance(raw, list):
        return ";".join(str(value) for value in raw)
    if isinstance(raw, bool):
        return "true" if raw else "false"
    return str(dumped)
