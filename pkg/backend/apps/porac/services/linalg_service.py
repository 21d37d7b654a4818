from typing import Tuple

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidStateError, NotHermitianError
from ..interfaces.eigensolver import EigensolverInterface
from ..models.linalg import PSD_TOL, ComplexMatrix, DensityMatrix, PureState

PROBABILITY_TOL = 1e-12


class LinalgService:
    """Dense complex linear algebra on states and operators."""

    def __init__(self, eigensolver: EigensolverInterface):
        self.eigensolver = eigensolver

    def inner(self, u: PureState, v: PureState) -> complex:
        """<u|v>, conjugate-linear in the first argument."""
        self._same_dim(u.dim, v.dim)
        return complex(np.vdot(u.amplitudes, v.amplitudes))

    def projector(self, v: PureState) -> DensityMatrix:
        """|v><v| for a normalized v."""
        return DensityMatrix(ComplexMatrix(np.outer(v.amplitudes, v.amplitudes.conj()), hermitian=True))

    def born_probability(self, rho: DensityMatrix, outcome: PureState) -> float:
        """Tr(rho |outcome><outcome|)."""
        self._same_dim(rho.dim, outcome.dim)
        x = outcome.amplitudes
        p = float(np.real(np.vdot(x, rho.entries @ x)))
        if p < -PROBABILITY_TOL or p > 1 + PROBABILITY_TOL:
            raise InvalidStateError(f"Born probability {p!r} outside [0, 1]")
        return min(max(p, 0.0), 1.0)

    def hermitian_eigenvalues(self, m: ComplexMatrix) -> np.ndarray:
        """Ascending real eigenvalues of a Hermitian matrix."""
        values, _ = self.hermitian_eigh(m)
        return values

    def hermitian_eigh(self, m: ComplexMatrix) -> Tuple[np.ndarray, np.ndarray]:
        if not m.hermitian:
            deviation = np.max(np.abs(m.entries - m.entries.conj().T))
            if deviation > 1e-12:
                raise NotHermitianError(f"matrix deviates from its adjoint by {deviation:.3e}")
        return self.eigensolver.eigh(m.entries)

    def min_eigenvalue(self, m: ComplexMatrix) -> float:
        return float(self.hermitian_eigenvalues(m)[0])

    def density_matrix(self, entries) -> DensityMatrix:
        """Validated DensityMatrix: Hermitian, unit trace and PSD within tolerance."""
        rho = DensityMatrix(ComplexMatrix(entries, hermitian=True))
        lowest = self.min_eigenvalue(rho.matrix)
        if lowest < -PSD_TOL:
            raise InvalidStateError(f"minimum eigenvalue {lowest:.3e} is below -{PSD_TOL}")
        return rho

    def maximally_mixed(self, d: int) -> DensityMatrix:
        return DensityMatrix(ComplexMatrix(np.eye(d) / d, hermitian=True))

    def top_eigenstate(self, m: ComplexMatrix) -> PureState:
        """Eigenvector of the largest eigenvalue, phase-fixed."""
        _, vectors = self.hermitian_eigh(m)
        return PureState.from_vector(vectors[:, -1])

    @staticmethod
    def _same_dim(a: int, b: int):
        if a != b:
            raise DimensionMismatchError(f"dimension {a} does not match {b}")
