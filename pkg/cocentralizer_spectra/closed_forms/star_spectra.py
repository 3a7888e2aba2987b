from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import IntEigenvalue, SurdPairEigenvalue
from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.exact_linear.domain.surd_value import SurdValue


def _require_star(n: int) -> None:
    if n < 2:
        raise ValueError(f"star spectra need at least 2 leaves, got {n}")


class StarSpectra:
    """Spectra of the star K_{1,n}."""

    @staticmethod
    def star_distance_spectrum(n: int) -> SpectrumSpec:
        """{-2 × (n-1); (n-1) ± √(n²-n+1)}."""
        _require_star(n)
        return SpectrumSpec(
            (
                (IntEigenvalue(-2), n - 1),
                (SurdPairEigenvalue(SurdValue.normalized(n - 1, n * n - n + 1, 1)), 1),
            ),
            source=f"distance spectrum of K_{{1,{n}}}",
        )

    @staticmethod
    def star_dl_spectrum(n: int) -> SpectrumSpec:
        """{0; n+1; (2n+1) × (n-1)}."""
        _require_star(n)
        return SpectrumSpec(
            ((IntEigenvalue(0), 1), (IntEigenvalue(n + 1), 1), (IntEigenvalue(2 * n + 1), n - 1)),
            source=f"distance Laplacian spectrum of K_{{1,{n}}}",
        )

    @staticmethod
    def star_dq_spectrum(n: int) -> SpectrumSpec:
        """{(2n-3) × (n-1); ((5n-3) ± √(9n²-14n+9))/2}."""
        _require_star(n)
        return SpectrumSpec(
            (
                (IntEigenvalue(2 * n - 3), n - 1),
                (SurdPairEigenvalue(SurdValue.normalized(5 * n - 3, 9 * n * n - 14 * n + 9, 2)), 1),
            ),
            source=f"distance signless Laplacian spectrum of K_{{1,{n}}}",
        )
