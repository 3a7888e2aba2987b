import networkx as nx
import pytest
import sympy

from cocentralizer_spectra.closed_forms.domain.dq_variant_enum import DqVariantEnum
from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import IntEigenvalue, PolyRootsEigenvalue
from cocentralizer_spectra.closed_forms.domain.graph_shape import DegenerateShape, StarShape, TripartiteShape
from cocentralizer_spectra.closed_forms.family_shapes import REASON_PSL2_DEGREE, FamilyShapes
from cocentralizer_spectra.closed_forms.family_spectrum_claims import FamilySpectrumClaims
from cocentralizer_spectra.closed_forms.multipartite_eigenvectors import MultipartiteEigenvectors
from cocentralizer_spectra.closed_forms.multipartite_formulas import MultipartiteFormulas
from cocentralizer_spectra.closed_forms.psl_closed_forms import PslClosedForms
from cocentralizer_spectra.closed_forms.star_spectra import StarSpectra
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exact_linear.exact_linear_algebra import ExactLinearAlgebra
from cocentralizer_spectra.exact_linear.spectrum_polynomials import SpectrumPolynomials
from cocentralizer_spectra.exceptions import DegenerateSpecError
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.distance_matrices import DistanceMatrices
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum


def _computed_char_poly(parts, kind):
    matrix = DistanceMatrices().matrix_of_kind(nx.complete_multipartite_graph(*parts), kind)
    return ExactLinearAlgebra(exact_dimension_cap=256).char_poly(matrix)


class TestStarSpectra:
    """Tests for the star K_{1,n} closed forms."""

    def test_distance_spectrum_text(self):
        assert StarSpectra.star_distance_spectrum(3).to_text() == "{-2×2, 2 ± √7}"

    def test_signless_laplacian_spectrum_text(self):
        assert StarSpectra.star_dq_spectrum(3).to_text() == "{3×2, 6 ± √12}"

    @pytest.mark.parametrize("kind", list(MatrixKindEnum))
    @pytest.mark.parametrize("n", range(2, 9))
    def test_star_spectra_match_computed_char_poly(self, n, kind):
        spectrum = {
            MatrixKindEnum.D: StarSpectra.star_distance_spectrum,
            MatrixKindEnum.DL: StarSpectra.star_dl_spectrum,
            MatrixKindEnum.DQ: StarSpectra.star_dq_spectrum,
        }[kind](n)

        assert spectrum.root_count == n + 1
        assert SpectrumPolynomials.spectrum_to_poly(spectrum) == _computed_char_poly((1, n), kind)

    @pytest.mark.parametrize("n", [0, 1])
    def test_star_needs_two_leaves(self, n):
        with pytest.raises(ValueError):
            StarSpectra.star_distance_spectrum(n)


class TestPslClosedForms:
    """Tests for the PSL(2, 2^k) tripartite closed forms."""

    @pytest.mark.parametrize("k, parts", [(2, (5, 10, 6)), (3, (9, 36, 28)), (4, (17, 136, 120))])
    def test_parts(self, k, parts):
        assert PslClosedForms.parts(k) == parts
        assert PslClosedForms.vertex_count(k) == sum(parts)

    def test_distance_cubic_for_degree_two(self):
        assert PslClosedForms.distance_cubic_claimed(2) == BigPoly.from_descending([1, -36, 264, -520])

    def test_distance_cubic_for_degree_three(self):
        assert PslClosedForms.distance_cubic_claimed(3) == BigPoly.from_descending([1, -140, 4180, -27360])

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_distance_char_poly_agrees_with_multipartite_formula(self, k):
        expected = MultipartiteFormulas.multipartite_distance_charpoly(PslClosedForms.parts(k))

        assert PslClosedForms.psl_distance_charpoly_claimed(k) == expected

    def test_dl_spectrum_for_degree_two(self):
        spectrum = PslClosedForms.psl_dl_spectrum(2)

        assert spectrum.entries == (
            (IntEigenvalue(0), 1),
            (IntEigenvalue(31), 9),
            (IntEigenvalue(27), 5),
            (IntEigenvalue(26), 4),
            (IntEigenvalue(21), 2),
        )
        assert SpectrumPolynomials.spectrum_to_poly(spectrum) == _computed_char_poly((5, 10, 6), MatrixKindEnum.DL)

    def test_dq_quotient_for_degree_two(self):
        quotient = PslClosedForms.psl_dq_quotient(2)
        lam = sympy.Symbol("lam")
        reference = sympy.Matrix(quotient.entries).charpoly(lam).all_coeffs()

        assert quotient.entries == ((32, 10, 6), (5, 47, 6), (5, 10, 35))
        assert quotient.char_poly() == BigPoly.from_descending(int(c) for c in reference)
        assert quotient.as_int_matrix() == IntMatrix.from_rows(quotient.entries)

    def test_dq_proof_blocks_variant_matches_computed(self):
        spectrum = PslClosedForms.psl_dq_spectrum(2, DqVariantEnum.PROOF_BLOCKS)
        integers = [(expression.value, multiplicity) for expression, multiplicity in spectrum.entries[:3]]

        assert integers == [(22, 4), (27, 9), (23, 5)]
        assert isinstance(spectrum.entries[3][0], PolyRootsEigenvalue)
        assert SpectrumPolynomials.spectrum_to_poly(spectrum) == _computed_char_poly((5, 10, 6), MatrixKindEnum.DQ)

    def test_dq_statement_text_variant_differs(self):
        spectrum = PslClosedForms.psl_dq_spectrum(2, DqVariantEnum.STATEMENT_TEXT)

        assert spectrum.entries[2] == (IntEigenvalue(29), 5)
        assert SpectrumPolynomials.spectrum_to_poly(spectrum) != _computed_char_poly((5, 10, 6), MatrixKindEnum.DQ)

    @pytest.mark.parametrize("k", [2, 3])
    def test_distance_spectrum_matches_computed(self, k):
        spectrum = PslClosedForms.psl_distance_spectrum(k)

        assert spectrum.root_count == PslClosedForms.vertex_count(k)
        assert SpectrumPolynomials.spectrum_to_poly(spectrum) == _computed_char_poly(
            PslClosedForms.parts(k), MatrixKindEnum.D
        )

    def test_degree_one_rejected(self):
        with pytest.raises(DegenerateSpecError):
            PslClosedForms.psl_dl_spectrum(1)


class TestMultipartiteFormulas:
    """Tests for the complete multipartite distance polynomial and D^L eigenvectors."""

    @pytest.mark.parametrize("parts", [(1, 3), (2, 2), (1, 1, 1, 1), (2, 3, 4), (5, 10, 6), (3, 3, 3, 1, 2)])
    def test_distance_charpoly_matches_computed(self, parts):
        assert MultipartiteFormulas.multipartite_distance_charpoly(parts) == _computed_char_poly(
            parts, MatrixKindEnum.D
        )

    def test_complete_graph(self):
        expected = BigPoly.linear_root(3) * BigPoly.linear_root(-1) ** 3

        assert MultipartiteFormulas.multipartite_distance_charpoly((1, 1, 1, 1)) == expected

    @pytest.mark.parametrize("parts", [(4,), (3, 0), (2, -1)])
    def test_invalid_parts(self, parts):
        with pytest.raises(ValueError):
            MultipartiteFormulas.multipartite_distance_charpoly(parts)

    @pytest.mark.parametrize("sizes", [(1, 3), (5, 10, 6), (2, 2, 2, 3)])
    def test_dl_eigenvectors_are_independent_eigenvectors(self, sizes):
        graph = nx.complete_multipartite_graph(*sizes)
        laplacian = DistanceMatrices().matrix_of_kind(graph, MatrixKindEnum.DL)
        offsets = [sum(sizes[:i]) for i in range(len(sizes))]
        parts = [tuple(range(offset, offset + size)) for offset, size in zip(offsets, sizes)]

        pairs = MultipartiteEigenvectors.dl_eigenvectors(parts)

        assert len(pairs) == sum(sizes)
        for mu, vector in pairs:
            assert laplacian.matvec(vector) == tuple(mu * value for value in vector)
        assert ExactLinearAlgebra.rank(IntMatrix.from_rows(vector for _, vector in pairs)) == sum(sizes)


class TestFamilyShapes:
    """Tests for claimed shapes and spectra per family."""

    @pytest.mark.parametrize(
        "spec, shape",
        [
            (GroupSpec.q4n(3), StarShape(3)),
            (GroupSpec.d2m(5), StarShape(5)),
            (GroupSpec.d2m(6), StarShape(3)),
            (GroupSpec.qd2n(4), StarShape(4)),
            (GroupSpec.m2mn(3, 2), StarShape(3)),
            (GroupSpec.m2mn(8, 2), StarShape(4)),
            (GroupSpec.psl2(2), TripartiteShape(5, 10, 6)),
        ],
    )
    def test_family_cocentralizer_shape(self, spec, shape):
        assert FamilyShapes.family_cocentralizer_shape(spec) == shape

    @pytest.mark.parametrize(
        "spec, reason",
        [
            (GroupSpec.q4n(2), "all centralizer cardinalities equal 4; co-centralizer graph is edgeless"),
            (GroupSpec.d2m(4), "all centralizer cardinalities equal 4; co-centralizer graph is edgeless"),
            (GroupSpec.m2mn(4, 2), "all centralizer cardinalities equal 8; co-centralizer graph is edgeless"),
            (GroupSpec.psl2(1), REASON_PSL2_DEGREE),
        ],
    )
    def test_degenerate_shapes(self, spec, reason):
        shape = FamilyShapes.family_cocentralizer_shape(spec)

        assert isinstance(shape, DegenerateShape)
        assert shape.reason == reason

    def test_claimed_spectrum_of_degenerate_group_raises(self):
        with pytest.raises(DegenerateSpecError):
            FamilySpectrumClaims.claimed_spectrum(GroupSpec.q4n(2), MatrixKindEnum.D)

    def test_quasidihedral_distance_claim(self):
        assert FamilySpectrumClaims.claimed_spectrum(GroupSpec.qd2n(4), MatrixKindEnum.D).to_text() == (
            "{-2×3, 3 ± √13}"
        )

    @pytest.mark.parametrize("kind", list(MatrixKindEnum))
    @pytest.mark.parametrize(
        "spec",
        [GroupSpec.q4n(5), GroupSpec.d2m(7), GroupSpec.d2m(10), GroupSpec.qd2n(5), GroupSpec.m2mn(6, 3)],
    )
    def test_claimed_spectra_match_the_claimed_shape(self, spec, kind):
        shape = FamilyShapes.family_cocentralizer_shape(spec)
        claimed = FamilySpectrumClaims.claimed_spectrum(spec, kind)

        assert SpectrumPolynomials.spectrum_to_poly(claimed) == _computed_char_poly(shape.parts, kind)
