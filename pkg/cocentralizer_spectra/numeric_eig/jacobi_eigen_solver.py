import logging
from typing import Optional

import numpy as np

from cocentralizer_spectra.constants import DEFAULT_JACOBI_MAX_SWEEPS, DEFAULT_SWEEP_TOLERANCE
from cocentralizer_spectra.exceptions import EigenSolverDidNotConvergeError, NonSymmetricMatrixError
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix
from cocentralizer_spectra.numeric_eig.domain.numeric_spectrum import NumericSpectrum


class JacobiEigenSolver:
    """
    Cyclic Jacobi eigenvalues of a symmetric matrix.

    A sweep visits every off-diagonal pair once in round-robin order; the pairs of one round are
    disjoint, so their rotations commute and are applied together.
    """

    ERROR_MSG_NON_SYMMETRIC = "Jacobi eigensolver requires a symmetric matrix"
    ERROR_MSG_NO_CONVERGENCE = "Jacobi did not converge after %d sweeps (off-diagonal mass %.3e)"
    LOG_MSG_CONVERGED = "Jacobi converged on a %dx%d matrix after %d sweeps"

    def __init__(self, max_sweeps: int = DEFAULT_JACOBI_MAX_SWEEPS, logger: Optional[logging.Logger] = None) -> None:
        self._max_sweeps = max_sweeps
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def jacobi_spectrum(self, matrix: IntMatrix, tol: float = DEFAULT_SWEEP_TOLERANCE) -> NumericSpectrum:
        if not matrix.is_symmetric():
            self._logger.error(self.ERROR_MSG_NON_SYMMETRIC)
            raise NonSymmetricMatrixError(self.ERROR_MSG_NON_SYMMETRIC)
        n = matrix.dimension
        a = matrix.to_numpy(float)
        if n <= 1:
            return NumericSpectrum(tuple(np.diag(a)), tol, 0)

        threshold = tol * max(np.linalg.norm(a), 1.0)
        rounds = self._round_robin(n)
        for sweep in range(self._max_sweeps + 1):
            off_diagonal = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
            if off_diagonal < threshold:
                self._logger.debug(self.LOG_MSG_CONVERGED, n, n, sweep)
                return NumericSpectrum(tuple(np.diag(a)), tol, sweep)
            if sweep == self._max_sweeps:
                break
            for p, q in rounds:
                self._rotate(a, p, q)

        self._logger.error(self.ERROR_MSG_NO_CONVERGENCE, self._max_sweeps, off_diagonal)
        raise EigenSolverDidNotConvergeError(self.ERROR_MSG_NO_CONVERGENCE % (self._max_sweeps, off_diagonal))

    @staticmethod
    def _rotate(a: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
        apq = a[p, q]
        active = apq != 0.0
        if not active.any():
            return
        p, q, apq = p[active], q[active], apq[active]
        theta = (a[q, q] - a[p, p]) / (2.0 * apq)
        t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
        t[theta == 0.0] = 1.0
        c = 1.0 / np.sqrt(t * t + 1.0)
        s = t * c

        columns_p = a[:, p].copy()
        columns_q = a[:, q].copy()
        a[:, p] = columns_p * c - columns_q * s
        a[:, q] = columns_p * s + columns_q * c

        rows_p = a[p, :].copy()
        rows_q = a[q, :].copy()
        a[p, :] = rows_p * c[:, None] - rows_q * s[:, None]
        a[q, :] = rows_p * s[:, None] + rows_q * c[:, None]

        a[p, q] = 0.0
        a[q, p] = 0.0

    @staticmethod
    def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
        players = list(range(n)) + ([-1] if n % 2 else [])
        size = len(players)
        rounds: list[tuple[np.ndarray, np.ndarray]] = []
        for _ in range(size - 1):
            pairs = [
                (min(players[i], players[size - 1 - i]), max(players[i], players[size - 1 - i]))
                for i in range(size // 2)
                if players[i] >= 0 and players[size - 1 - i] >= 0
            ]
            rounds.append(
                (np.array([p for p, _ in pairs], dtype=np.intp), np.array([q for _, q in pairs], dtype=np.intp))
            )
            players = [players[0], players[-1]] + players[1:-1]
        return rounds
