import logging
from typing import Tuple

import numpy as np

from ..exceptions import ConvergenceError, NotHermitianError
from ..interfaces.eigensolver import EigensolverInterface

logger = logging.getLogger(__name__)


class JacobiEigensolver(EigensolverInterface):
    """Cyclic Jacobi diagonalisation of a small dense Hermitian matrix.

    Each (p, q) rotation first removes the phase of a_pq and then applies the
    real symmetric Jacobi rotation, so the transform stays unitary.
    """

    def __init__(self, tol: float = 1e-12, max_sweeps: int = 100, hermitian_tol: float = 1e-12):
        self.tol = tol
        self.max_sweeps = max_sweeps
        self.hermitian_tol = hermitian_tol

    def eigh(self, matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        a = np.array(matrix, dtype=np.complex128)
        n = a.shape[0]
        if a.ndim != 2 or a.shape[1] != n:
            raise NotHermitianError(f"expected a square matrix, got shape {a.shape}")
        deviation = np.max(np.abs(a - a.conj().T)) if n else 0.0
        if deviation > self.hermitian_tol:
            raise NotHermitianError(f"matrix deviates from its adjoint by {deviation:.3e}")
        a = (a + a.conj().T) / 2
        v = np.eye(n, dtype=np.complex128)
        threshold = self.tol * max(1.0, np.linalg.norm(a))

        for sweep in range(self.max_sweeps):
            off = np.linalg.norm(a - np.diag(np.diag(a)))
            if off < threshold:
                logger.debug("Jacobi converged after %d sweeps (off-diagonal %.3e)", sweep, off)
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    self._rotate(a, v, p, q)
        else:
            raise ConvergenceError(f"Jacobi did not converge in {self.max_sweeps} sweeps")

        values = np.real(np.diag(a))
        order = np.argsort(values, kind='stable')
        return values[order], v[:, order]

    @staticmethod
    def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int):
        apq = a[p, q]
        r = abs(apq)
        if r < 1e-300:
            return
        phase = apq / r
        theta = 0.5 * np.arctan2(2 * r, (a[q, q] - a[p, p]).real)
        c, s = np.cos(theta), np.sin(theta)
        # unitary on columns (p, q): diag(1, conj(phase)) @ [[c, s], [-s, c]]
        u = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
        cols = [p, q]
        a[:, cols] = a[:, cols] @ u
        a[cols, :] = u.conj().T @ a[cols, :]
        a[p, q] = a[q, p] = 0.0
        v[:, cols] = v[:, cols] @ u
