import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar

from cocentralizer_spectra.configuration.interfaces.settings_retriever_interface import ISettingsRetriever
from cocentralizer_spectra.constants import (
    DEFAULT_CAYLEY_TABLE_MAX_ORDER,
    DEFAULT_EXACT_DIMENSION_CAP,
    DEFAULT_MATCH_TOLERANCE,
    DEFAULT_SCAN_CROSS_CHECK_ORDER,
    DEFAULT_SWEEP_TOLERANCE,
    ENV_CAYLEY_TABLE_MAX_ORDER,
    ENV_EXACT_DIMENSION_CAP,
    ENV_MATCH_TOLERANCE,
    ENV_PARALLELISM,
    ENV_REPORT_DIRECTORY,
    ENV_SCAN_CROSS_CHECK_ORDER,
    ENV_SWEEP_TOLERANCE,
)
from cocentralizer_spectra.exceptions import InvalidSettingError

T = TypeVar("T")


@dataclass(frozen=True)
class VerificationSettings:
    """Tunables for a verification run. Every field has a default; settings sources only override."""

    match_tolerance: float = DEFAULT_MATCH_TOLERANCE
    sweep_tolerance: float = DEFAULT_SWEEP_TOLERANCE
    exact_dimension_cap: int = DEFAULT_EXACT_DIMENSION_CAP
    parallelism: int = os.cpu_count() or 1
    report_directory: Optional[Path] = None
    scan_cross_check_order: int = DEFAULT_SCAN_CROSS_CHECK_ORDER
    cayley_table_max_order: int = DEFAULT_CAYLEY_TABLE_MAX_ORDER

    ERROR_MSG_UNPARSEABLE = 'Setting "%s" has unparseable value "%s"'
    ERROR_MSG_OUT_OF_RANGE = 'Setting "%s" must be %s (got %s)'

    def __post_init__(self) -> None:
        self._require(ENV_MATCH_TOLERANCE, self.match_tolerance > 0, "> 0", self.match_tolerance)
        self._require(ENV_SWEEP_TOLERANCE, self.sweep_tolerance > 0, "> 0", self.sweep_tolerance)
        self._require(ENV_EXACT_DIMENSION_CAP, self.exact_dimension_cap >= 1, ">= 1", self.exact_dimension_cap)
        self._require(ENV_PARALLELISM, self.parallelism >= 1, ">= 1", self.parallelism)
        self._require(ENV_SCAN_CROSS_CHECK_ORDER, self.scan_cross_check_order >= 0, ">= 0", self.scan_cross_check_order)
        self._require(ENV_CAYLEY_TABLE_MAX_ORDER, self.cayley_table_max_order >= 0, ">= 0", self.cayley_table_max_order)

    @classmethod
    def _require(cls, name: str, condition: bool, expectation: str, value: Any) -> None:
        if not condition:
            raise InvalidSettingError(cls.ERROR_MSG_OUT_OF_RANGE % (name, expectation, value))

    @classmethod
    async def hydrate(cls, retriever: ISettingsRetriever) -> "VerificationSettings":
        """Build settings from a retriever, falling back to defaults for anything unset."""

        async def read(name: str, parse: Callable[[str], T], default: T) -> T:
            raw = await retriever.retrieve_optional_setting_value(name)
            if raw is None:
                return default
            try:
                return parse(raw)
            except ValueError as ex:
                raise InvalidSettingError(cls.ERROR_MSG_UNPARSEABLE % (name, raw)) from ex

        report_dir = await retriever.retrieve_optional_setting_value(ENV_REPORT_DIRECTORY)
        return cls(
            match_tolerance=await read(ENV_MATCH_TOLERANCE, float, DEFAULT_MATCH_TOLERANCE),
            sweep_tolerance=await read(ENV_SWEEP_TOLERANCE, float, DEFAULT_SWEEP_TOLERANCE),
            exact_dimension_cap=await read(ENV_EXACT_DIMENSION_CAP, int, DEFAULT_EXACT_DIMENSION_CAP),
            parallelism=await read(ENV_PARALLELISM, int, os.cpu_count() or 1),
            report_directory=Path(report_dir) if report_dir else None,
            scan_cross_check_order=await read(ENV_SCAN_CROSS_CHECK_ORDER, int, DEFAULT_SCAN_CROSS_CHECK_ORDER),
            cayley_table_max_order=await read(ENV_CAYLEY_TABLE_MAX_ORDER, int, DEFAULT_CAYLEY_TABLE_MAX_ORDER),
        )

    def with_overrides(self, **overrides: Any) -> "VerificationSettings":
        """Copy with the non-None overrides applied, e.g. values given on the command line."""
        applied = {key: value for key, value in overrides.items() if value is not None}
        return dataclasses.replace(self, **applied)
