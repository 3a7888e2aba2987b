from .numeric_spectrum import NumericSpectrum, SpectrumMatch

__all__ = ["NumericSpectrum", "SpectrumMatch"]
