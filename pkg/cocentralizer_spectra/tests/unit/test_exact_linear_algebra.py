import networkx as nx
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exact_linear.exact_linear_algebra import ExactLinearAlgebra
from cocentralizer_spectra.exceptions import UseNullityPathError
from cocentralizer_spectra.graphs.distance_matrices import DistanceMatrices
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix


@st.composite
def int_matrices(draw, max_dimension=7, bound=50):
    dimension = draw(st.integers(min_value=1, max_value=max_dimension))
    entries = st.integers(min_value=-bound, max_value=bound)
    row = st.lists(entries, min_size=dimension, max_size=dimension)
    return IntMatrix.from_rows(draw(st.lists(row, min_size=dimension, max_size=dimension)))


def _sympy_char_poly(matrix: IntMatrix) -> BigPoly:
    lam = sympy.Symbol("lam")
    return BigPoly.from_descending(int(c) for c in sympy.Matrix(matrix.rows).charpoly(lam).all_coeffs())


class TestExactLinearAlgebra:
    """Tests for the multimodular characteristic polynomial and Bareiss elimination."""

    @pytest.fixture
    def algebra(self):
        return ExactLinearAlgebra(exact_dimension_cap=64)

    @settings(max_examples=200, deadline=None)
    @given(matrix=int_matrices())
    def test_char_poly_matches_sympy(self, matrix):
        assert ExactLinearAlgebra(64).char_poly(matrix) == _sympy_char_poly(matrix)

    @settings(max_examples=200, deadline=None)
    @given(matrix=int_matrices())
    def test_determinant_matches_sympy(self, matrix):
        assert ExactLinearAlgebra.determinant(matrix) == int(sympy.Matrix(matrix.rows).det())

    @settings(max_examples=100, deadline=None)
    @given(matrix=int_matrices(bound=2))
    def test_rank_matches_sympy(self, matrix):
        assert ExactLinearAlgebra.rank(matrix) == sympy.Matrix(matrix.rows).rank()

    def test_char_poly_with_large_entries(self, algebra):
        matrix = IntMatrix.from_rows([[10**12, 3], [3, -(10**12)]])

        assert algebra.char_poly(matrix) == BigPoly.from_descending([1, 0, -(10**24) - 9])

    def test_char_poly_of_empty_matrix_is_one(self, algebra):
        assert algebra.char_poly(IntMatrix(())) == BigPoly.one()

    def test_char_poly_above_cap_raises(self):
        with pytest.raises(UseNullityPathError):
            ExactLinearAlgebra(exact_dimension_cap=3).char_poly(IntMatrix.identity(4))

    def test_distance_char_poly_of_tripartite_graph(self, algebra):
        distances = DistanceMatrices().distance_matrix(nx.complete_multipartite_graph(5, 10, 6))
        expected = BigPoly.linear_root(-2) ** 18 * BigPoly.from_descending([1, -36, 264, -520])

        assert algebra.char_poly(distances) == expected

    @pytest.mark.parametrize(
        "rows, rank",
        [
            ([[1, 2], [2, 4]], 1),
            ([[0, 0], [0, 0]], 0),
            ([[0, 1], [1, 0]], 2),
            ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
        ],
    )
    def test_rank(self, rows, rank):
        assert ExactLinearAlgebra.rank(IntMatrix.from_rows(rows)) == rank

    def test_determinant_of_row_swap(self):
        assert ExactLinearAlgebra.determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
        assert ExactLinearAlgebra.determinant(IntMatrix(())) == 1

    @pytest.mark.parametrize("mu, nullity", [(0, 1), (21, 2), (26, 4), (27, 5), (31, 9), (22, 0)])
    def test_nullity_equals_laplacian_multiplicity(self, algebra, mu, nullity):
        graph = nx.complete_multipartite_graph(5, 10, 6)
        laplacian = DistanceMatrices.dl_matrix(DistanceMatrices().distance_matrix(graph))

        assert algebra.nullity_at(laplacian, mu) == nullity


class TestBigPoly:
    """Tests for integer polynomial arithmetic."""

    def test_trailing_zeros_are_stripped(self):
        assert BigPoly((1, 2, 0, 0)).degree == 1
        assert BigPoly.zero().is_zero()

    def test_product_and_power(self):
        assert BigPoly.linear_root(2) * BigPoly.linear_root(-2) == BigPoly.from_descending([1, 0, -4])
        assert BigPoly.linear_root(1) ** 3 == BigPoly.from_descending([1, -3, 3, -1])

    def test_divmod_monic(self):
        quotient, remainder = BigPoly.from_descending([1, 0, -4]).divmod_monic(BigPoly.linear_root(1))

        assert quotient == BigPoly.from_descending([1, 1])
        assert remainder == BigPoly.constant(-3)

    def test_evaluate(self):
        assert BigPoly.from_descending([1, -36, 264, -520]).evaluate(2) == 8 - 144 + 528 - 520

    def test_to_text(self):
        assert BigPoly.from_descending([1, -36, 264, -520]).to_text() == "λ^3 - 36·λ^2 + 264·λ - 520"
