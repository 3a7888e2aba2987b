from cocentralizer_spectra.closed_forms.domain.dq_variant_enum import DqVariantEnum
from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import IntEigenvalue, SurdPairEigenvalue
from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.closed_forms.family_shapes import FamilyShapes
from cocentralizer_spectra.closed_forms.domain.graph_shape import DegenerateShape
from cocentralizer_spectra.closed_forms.psl_closed_forms import PslClosedForms
from cocentralizer_spectra.closed_forms.star_spectra import StarSpectra
from cocentralizer_spectra.exact_linear.domain.surd_value import SurdValue
from cocentralizer_spectra.exceptions import DegenerateSpecError
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum


class FamilySpectrumClaims:
    """
    Claimed D, D^L and D^Q spectra of each family's co-centralizer graph, in the family's own parameters.

    Q4N and odd-m D2M/M2MN use the star forms in n or m; even-m D2M/M2MN and QD2N carry their own
    expressions (q = 2 surds in m, powers of two in n).
    """

    @staticmethod
    def claimed_spectrum(
        spec: GroupSpec,
        kind: MatrixKindEnum,
        variant: DqVariantEnum = DqVariantEnum.PROOF_BLOCKS,
    ) -> SpectrumSpec:
        shape = FamilyShapes.family_cocentralizer_shape(spec)
        if isinstance(shape, DegenerateShape):
            raise DegenerateSpecError(shape.reason)
        kind = MatrixKindEnum(kind)
        family = spec.family

        if family is GroupFamilyEnum.PSL2:
            if kind is MatrixKindEnum.D:
                return PslClosedForms.psl_distance_spectrum(spec.k)
            if kind is MatrixKindEnum.DL:
                return PslClosedForms.psl_dl_spectrum(spec.k)
            return PslClosedForms.psl_dq_spectrum(spec.k, variant)

        if family is GroupFamilyEnum.QD2N:
            return FamilySpectrumClaims._quasidihedral(spec.n, kind)

        if family in (GroupFamilyEnum.D2M, GroupFamilyEnum.M2MN) and spec.m % 2 == 0:
            return FamilySpectrumClaims._even_m(spec.m, kind, spec.label)

        leaves = spec.n if family is GroupFamilyEnum.Q4N else spec.m
        return FamilySpectrumClaims._star(leaves, kind, spec.label)

    @staticmethod
    def _star(leaves: int, kind: MatrixKindEnum, label: str) -> SpectrumSpec:
        if kind is MatrixKindEnum.D:
            spectrum = StarSpectra.star_distance_spectrum(leaves)
        elif kind is MatrixKindEnum.DL:
            spectrum = StarSpectra.star_dl_spectrum(leaves)
        else:
            spectrum = StarSpectra.star_dq_spectrum(leaves)
        return SpectrumSpec(spectrum.entries, source=f"{label}: {spectrum.source}")

    @staticmethod
    def _even_m(m: int, kind: MatrixKindEnum, label: str) -> SpectrumSpec:
        half = m // 2
        if kind is MatrixKindEnum.D:
            entries = (
                (IntEigenvalue(-2), half - 1),
                (SurdPairEigenvalue(SurdValue.normalized(m - 2, m * m - 2 * m + 4, 2)), 1),
            )
        elif kind is MatrixKindEnum.DL:
            entries = ((IntEigenvalue(0), 1), (IntEigenvalue(half + 1), 1), (IntEigenvalue(m + 1), half - 1))
        else:
            entries = (
                (IntEigenvalue(m - 3), half - 1),
                (SurdPairEigenvalue(SurdValue.normalized(5 * m // 2 - 3, 9 * m * m // 4 - 7 * m + 9, 2)), 1),
            )
        return SpectrumSpec(entries, source=f"{label}: {kind.value} spectrum for even m")

    @staticmethod
    def _quasidihedral(n: int, kind: MatrixKindEnum) -> SpectrumSpec:
        leaves = 2 ** (n - 2)
        if kind is MatrixKindEnum.D:
            entries = (
                (IntEigenvalue(-2), leaves - 1),
                (SurdPairEigenvalue(SurdValue.normalized(leaves - 1, 2 ** (2 * n - 4) - leaves + 1, 1)), 1),
            )
        elif kind is MatrixKindEnum.DL:
            entries = (
                (IntEigenvalue(0), 1),
                (IntEigenvalue(leaves + 1), 1),
                (IntEigenvalue(2 ** (n - 1) + 1), leaves - 1),
            )
        else:
            entries = (
                (IntEigenvalue(2 ** (n - 1) - 3), leaves - 1),
                (
                    SurdPairEigenvalue(
                        SurdValue.normalized(5 * leaves - 3, 9 * 2 ** (2 * n - 4) - 14 * leaves + 9, 2)
                    ),
                    1,
                ),
            )
        return SpectrumSpec(entries, source=f"QD2N(n={n}): {kind.value} spectrum")
