from dataclasses import dataclass, field
from typing import Optional

from cocentralizer_spectra.closed_forms.domain.dq_variant_enum import DqVariantEnum
from cocentralizer_spectra.closed_forms.domain.graph_shape import GraphShape
from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.verification.domain.outcome_enum import OutcomeEnum


@dataclass(frozen=True)
class MismatchDetail:
    """First claimed factor whose multiplicity differs from the computed one."""

    factor: str
    computed_multiplicity: int
    claimed_multiplicity: int
    description: str = ""

    def to_text(self) -> str:
        text = f"{self.factor}: computed multiplicity {self.computed_multiplicity}, claimed {self.claimed_multiplicity}"
        return f"{text} ({self.description})" if self.description else text


@dataclass(frozen=True)
class VariantOutcome:
    variant: DqVariantEnum
    outcome: OutcomeEnum
    mismatch: Optional[MismatchDetail] = None


@dataclass(frozen=True)
class VerificationReport:
    spec: GroupSpec
    kind: MatrixKindEnum
    shape: GraphShape
    outcome: OutcomeEnum
    claimed_shape: Optional[GraphShape] = None
    mismatch: Optional[MismatchDetail] = None
    degenerate_reason: Optional[str] = None
    computed_charpoly: Optional[BigPoly] = None
    computed_spectrum: Optional[SpectrumSpec] = None
    claimed_spectrum: Optional[SpectrumSpec] = None
    numeric_residual: Optional[float] = None
    numeric_values: tuple[float, ...] = ()
    exact_path: Optional[str] = None
    variants: tuple[VariantOutcome, ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_match(self) -> bool:
        return self.outcome is OutcomeEnum.EXACT_MATCH


@dataclass(frozen=True)
class ClaimCheckReport:
    """Outcome of checking a structural claim (centralizer counts, explicit eigenvectors)."""

    spec: GroupSpec
    claim: str
    outcome: OutcomeEnum
    computed: str
    claimed: str
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class ScanRow:
    parameter: int
    integral: Optional[bool]
    witness: str
    cross_checked: bool = False
    agrees: Optional[bool] = None


@dataclass(frozen=True)
class ScanReport:
    family: str
    kind: MatrixKindEnum
    rows: tuple[ScanRow, ...]

    @property
    def integral_parameters(self) -> tuple[int, ...]:
        return tuple(row.parameter for row in self.rows if row.integral)

    @property
    def disagreements(self) -> tuple[ScanRow, ...]:
        return tuple(row for row in self.rows if row.agrees is False)
