import logging
from typing import Optional

from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.constants import DEFAULT_MATCH_TOLERANCE
from cocentralizer_spectra.exceptions import MultiplicityTotalMismatchError
from cocentralizer_spectra.numeric_eig.domain.numeric_spectrum import NumericSpectrum, SpectrumMatch


class SpectrumMatcher:
    ERROR_MSG_TOTAL_MISMATCH = "Numeric spectrum has %d values, claimed spectrum has %d roots"

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def match_spectra(
        self,
        numeric: NumericSpectrum,
        claimed: SpectrumSpec,
        tol: float = DEFAULT_MATCH_TOLERANCE,
    ) -> SpectrumMatch:
        """Pairs sorted values; relative residual |x - y| / max(1, |y|) against tol."""
        claimed_values = claimed.numeric_values()
        if len(claimed_values) != len(numeric.values):
            self._logger.error(self.ERROR_MSG_TOTAL_MISMATCH, len(numeric.values), len(claimed_values))
            raise MultiplicityTotalMismatchError(
                self.ERROR_MSG_TOTAL_MISMATCH % (len(numeric.values), len(claimed_values))
            )
        residuals = tuple(
            abs(value - expected) / max(1.0, abs(expected)) for value, expected in zip(numeric.values, claimed_values)
        )
        return SpectrumMatch(matched=all(residual <= tol for residual in residuals), residuals=residuals)
