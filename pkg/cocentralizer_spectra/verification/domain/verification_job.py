from dataclasses import dataclass

from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum


@dataclass(frozen=True)
class VerificationJob:
    spec: GroupSpec
    kind: MatrixKindEnum
