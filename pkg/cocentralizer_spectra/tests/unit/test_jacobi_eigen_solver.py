import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cocentralizer_spectra.closed_forms.star_spectra import StarSpectra
from cocentralizer_spectra.exceptions import (
    EigenSolverDidNotConvergeError,
    MultiplicityTotalMismatchError,
    NonSymmetricMatrixError,
)
from cocentralizer_spectra.graphs.distance_matrices import DistanceMatrices
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.numeric_eig.domain.numeric_spectrum import NumericSpectrum
from cocentralizer_spectra.numeric_eig.jacobi_eigen_solver import JacobiEigenSolver
from cocentralizer_spectra.numeric_eig.spectrum_matcher import SpectrumMatcher


@st.composite
def symmetric_matrices(draw, max_dimension=9, bound=20):
    dimension = draw(st.integers(min_value=1, max_value=max_dimension))
    entries = draw(
        st.lists(
            st.integers(min_value=-bound, max_value=bound),
            min_size=dimension * dimension,
            max_size=dimension * dimension,
        )
    )
    rows = [[0] * dimension for _ in range(dimension)]
    for i in range(dimension):
        for j in range(i, dimension):
            rows[i][j] = rows[j][i] = entries[i * dimension + j]
    return IntMatrix.from_rows(rows)


class TestJacobiEigenSolver:
    """Tests for the round-robin Jacobi eigensolver."""

    @pytest.fixture
    def solver(self):
        return JacobiEigenSolver()

    def test_rejects_non_symmetric_matrix(self, solver):
        with pytest.raises(NonSymmetricMatrixError):
            solver.jacobi_spectrum(IntMatrix.from_rows([[1, 2], [3, 4]]))

    def test_diagonal_matrix_needs_no_sweeps(self, solver):
        spectrum = solver.jacobi_spectrum(IntMatrix.from_rows([[3, 0], [0, -1]]))

        assert spectrum.values == (-1.0, 3.0)
        assert spectrum.sweeps == 0

    def test_one_by_one(self, solver):
        assert solver.jacobi_spectrum(IntMatrix.from_rows([[5]])).values == (5.0,)

    def test_star_distance_spectrum(self, solver):
        distances = DistanceMatrices().distance_matrix(nx.star_graph(3))
        spectrum = solver.jacobi_spectrum(distances)

        expected = sorted([-2.0, -2.0, 2 - math.sqrt(7), 2 + math.sqrt(7)])
        assert spectrum.values == pytest.approx(expected, abs=1e-9)

    def test_no_convergence_raises(self):
        matrix = IntMatrix.from_rows([[1, 2, 3], [2, 4, 5], [3, 5, 6]])

        with pytest.raises(EigenSolverDidNotConvergeError):
            JacobiEigenSolver(max_sweeps=0).jacobi_spectrum(matrix)

    @settings(max_examples=100, deadline=None)
    @given(matrix=symmetric_matrices())
    def test_trace_and_eigenvalues_match_numpy(self, matrix):
        spectrum = JacobiEigenSolver().jacobi_spectrum(matrix)
        reference = np.linalg.eigvalsh(matrix.to_numpy())

        assert len(spectrum) == matrix.dimension
        assert sum(spectrum.values) == pytest.approx(matrix.trace(), abs=1e-7)
        assert spectrum.values == pytest.approx(sorted(reference), abs=1e-7)

    @pytest.mark.slow
    def test_larger_multipartite_matrix(self, solver):
        graph = nx.complete_multipartite_graph(9, 36, 28)
        laplacian = DistanceMatrices().matrix_of_kind(graph, MatrixKindEnum.DL)
        spectrum = solver.jacobi_spectrum(laplacian)

        expected = sorted([0.0] + [73.0] * 2 + [82.0] * 8 + [101.0] * 27 + [109.0] * 35)
        assert spectrum.values == pytest.approx(expected, abs=1e-6)


class TestSpectrumMatcher:
    """Tests for pairing numeric eigenvalues with a claimed spectrum."""

    @pytest.fixture
    def matcher(self):
        return SpectrumMatcher()

    def test_matching_spectrum(self, matcher):
        claimed = StarSpectra.star_dl_spectrum(3)
        numeric = NumericSpectrum((7.0, 0.0, 4.0, 7.0), tolerance=1e-12)

        match = matcher.match_spectra(numeric, claimed)

        assert match.matched
        assert match.max_residual == 0.0

    def test_residual_is_relative(self, matcher):
        claimed = StarSpectra.star_dl_spectrum(3)
        numeric = NumericSpectrum((0.0, 4.0, 7.0, 7.7), tolerance=1e-12)

        match = matcher.match_spectra(numeric, claimed, tol=1e-3)

        assert not match.matched
        assert match.max_residual == pytest.approx(0.1)

    def test_count_mismatch_raises(self, matcher):
        with pytest.raises(MultiplicityTotalMismatchError):
            matcher.match_spectra(NumericSpectrum((0.0, 4.0), 1e-12), StarSpectra.star_dl_spectrum(3))
