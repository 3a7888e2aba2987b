import hashlib
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum

RANGE_SEPARATOR = ".."


def parse_range(text: str) -> tuple[int, int]:
    """'a..b' -> (a, b), inclusive; a single integer is a one-point range."""
    text = text.strip()
    if RANGE_SEPARATOR in text:
        low, high = text.split(RANGE_SEPARATOR, 1)
        bounds = (int(low), int(high))
    else:
        bounds = (int(text), int(text))
    if bounds[0] > bounds[1]:
        raise ValueError(f"empty range {text!r}")
    return bounds


class RunConfig(BaseModel):
    """One CLI invocation: exactly one subcommand with its validated options."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    subcommand: Literal["group", "spectrum", "verify", "scan"]
    family: Optional[GroupFamilyEnum] = None
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    n_range: Optional[tuple[int, int]] = None
    m_range: Optional[tuple[int, int]] = None
    k_range: Optional[tuple[int, int]] = None
    parameter_range: Optional[tuple[int, int]] = None
    kinds: tuple[MatrixKindEnum, ...] = (MatrixKindEnum.D,)
    lemma1: bool = False
    parts: Optional[tuple[int, ...]] = None
    centralizers: bool = False
    eigenvectors: bool = False
    output_format: Literal["json", "csv", "text"] = "text"
    output: Optional[Path] = None
    report_dir: Optional[Path] = None
    tolerance: Optional[float] = Field(default=None, gt=0)
    jobs: Optional[int] = Field(default=None, ge=1)
    dump_graph: Optional[Path] = None
    verbose: bool = False

    @field_validator("n_range", "m_range", "k_range", "parameter_range", mode="before")
    @classmethod
    def _parse_range_text(cls, value: object) -> object:
        return parse_range(value) if isinstance(value, str) else value

    @field_validator("parts", mode="before")
    @classmethod
    def _parse_parts_text(cls, value: object) -> object:
        if isinstance(value, str):
            return tuple(int(part) for part in value.split(",") if part.strip())
        return value

    @model_validator(mode="after")
    def _check_subcommand_options(self) -> "RunConfig":
        if self.subcommand == "verify" and self.lemma1:
            if not self.parts:
                raise ValueError("--lemma1 needs --parts")
            return self
        if self.family is None:
            raise ValueError(f"{self.subcommand} needs --family")
        if self.subcommand == "scan" and self.parameter_range is None:
            raise ValueError("scan needs --range")
        if self.centralizers and self.eigenvectors:
            raise ValueError("--centralizers and --eigenvectors are exclusive")
        return self

    def config_hash(self) -> str:
        """First 12 hex digits of the SHA-256 of the canonical JSON form; names report files."""
        return hashlib.sha256(self.model_dump_json().encode("utf-8")).hexdigest()[:12]
