from cocentralizer_spectra.closed_forms.domain.dq_variant_enum import DqVariantEnum
from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import IntEigenvalue, PolyRootsEigenvalue
from cocentralizer_spectra.closed_forms.domain.quotient_matrix3 import QuotientMatrix3
from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exceptions import DegenerateSpecError


def _require_degree(k: int) -> None:
    if k < 2:
        raise DegenerateSpecError(f"PSL(2,2^k) closed forms apply only for k >= 2, got k={k}")


class PslClosedForms:
    """
    Closed forms for the co-centralizer graph K_{2^k+1, 2^(k-1)(2^k+1), 2^(k-1)(2^k-1)} of PSL(2,2^k).

    Expressions keep their powers-of-two shape; no coefficient is simplified or corrected.
    """

    @staticmethod
    def parts(k: int) -> tuple[int, int, int]:
        q = 1 << k
        return q + 1, (q // 2) * (q + 1), (q // 2) * (q - 1)

    @staticmethod
    def vertex_count(k: int) -> int:
        return sum(PslClosedForms.parts(k))

    @staticmethod
    def distance_cubic_claimed(k: int) -> BigPoly:
        _require_degree(k)
        c2 = 4 - 2 ** (2 * k + 1) - 2 ** (k + 1)
        c1 = 4 + 3 * 2 ** (4 * k - 2) + 3 * 2 ** (3 * k) - 23 * 2 ** (2 * k - 2) - 2 ** (k + 3)
        c0 = -(2 ** (5 * k)) + 2 ** (4 * k - 1) + 7 * 2 ** (3 * k) - 5 * 2 ** (2 * k - 1) - 2 ** (k + 3)
        return BigPoly((c0, c1, c2, 1))

    @staticmethod
    def psl_distance_charpoly_claimed(k: int) -> BigPoly:
        _require_degree(k)
        exponent = 2**k + 2 ** (2 * k) - 2
        return BigPoly.linear_root(-2) ** exponent * PslClosedForms.distance_cubic_claimed(k)

    @staticmethod
    def psl_distance_spectrum(k: int) -> SpectrumSpec:
        _require_degree(k)
        return SpectrumSpec(
            (
                (IntEigenvalue(-2), 2**k + 2 ** (2 * k) - 2),
                (PolyRootsEigenvalue(PslClosedForms.distance_cubic_claimed(k)), 1),
            ),
            source=f"PSL(2,2^{k}) distance spectrum",
        )

    @staticmethod
    def psl_dl_spectrum(k: int) -> SpectrumSpec:
        _require_degree(k)
        half = 2 ** (k - 1)
        return SpectrumSpec(
            (
                (IntEigenvalue(0), 1),
                (IntEigenvalue(3 * 2 ** (2 * k - 1) + 3 * half + 1), half * (2**k + 1) - 1),
                (IntEigenvalue(3 * 2 ** (2 * k - 1) + half + 1), half * (2**k - 1) - 1),
                (IntEigenvalue(2 ** (k + 1) + 2 ** (2 * k) + 2), 2**k),
                (IntEigenvalue(2 ** (2 * k) + 2**k + 1), 2),
            ),
            source=f"PSL(2,2^{k}) distance Laplacian spectrum",
        )

    @staticmethod
    def psl_dq_quotient(k: int) -> QuotientMatrix3:
        _require_degree(k)
        a, b, c = PslClosedForms.parts(k)
        half = 2 ** (k - 1)
        return QuotientMatrix3(
            (
                (2 ** (k + 1) + 2 ** (2 * k) - 2 + 2 * (2**k + 1), b, c),
                (a, 3 * 2 ** (2 * k - 1) + 3 * half - 3 + 2**k * (2**k + 1), c),
                (a, b, 3 * 2 ** (2 * k - 1) + half - 3 + 2**k * (2**k - 1)),
            )
        )

    @staticmethod
    def psl_dq_spectrum(k: int, variant: DqVariantEnum = DqVariantEnum.PROOF_BLOCKS) -> SpectrumSpec:
        _require_degree(k)
        half = 2 ** (k - 1)
        third_shift = 3 if DqVariantEnum(variant) is DqVariantEnum.STATEMENT_TEXT else -3
        return SpectrumSpec(
            (
                (IntEigenvalue(2 ** (k + 1) + 2 ** (2 * k) - 2), 2**k),
                (IntEigenvalue(3 * 2 ** (2 * k - 1) + 3 * half - 3), half * (2**k + 1) - 1),
                (IntEigenvalue(3 * 2 ** (2 * k - 1) + half + third_shift), half * (2**k - 1) - 1),
                (PolyRootsEigenvalue(PslClosedForms.psl_dq_quotient(k).char_poly()), 1),
            ),
            source=f"PSL(2,2^{k}) distance signless Laplacian spectrum ({DqVariantEnum(variant).value})",
        )
