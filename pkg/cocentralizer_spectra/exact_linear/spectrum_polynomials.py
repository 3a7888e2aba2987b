from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly


class SpectrumPolynomials:
    @staticmethod
    def spectrum_to_poly(spectrum: SpectrumSpec) -> BigPoly:
        """Product of each entry's monic factor raised to its multiplicity."""
        result = BigPoly.one()
        for expression, multiplicity in spectrum.entries:
            result = result * expression.factor() ** multiplicity
        return result
