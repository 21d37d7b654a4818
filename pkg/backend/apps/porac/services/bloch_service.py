import logging
from typing import Tuple

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidStateError
from ..models.bloch import BlochVector, GellMannBasis, pure_length
from ..models.linalg import PSD_TOL, ComplexMatrix, DensityMatrix, PureState
from ..repositories.gell_mann_repository import GellMannRepository
from .linalg_service import LinalgService

logger = logging.getLogger(__name__)


class BlochService:
    """Map between density operators and Bloch vectors, rho = I/d + b . Gamma.

    Pure states have |b| = sqrt((d-1)/(2d)), i.e. 1/2 for a qubit. Bloch
    vectors quoted in the qubit convention rho = (I + r . sigma)/2 convert
    with b = r/2 (see from_qubit_bloch).
    """

    def __init__(self, linalg: LinalgService, gell_mann: GellMannRepository):
        self.linalg = linalg
        self.gell_mann_repository = gell_mann

    def gell_mann(self, d: int) -> GellMannBasis:
        return self.gell_mann_repository.find_by_dim(d)

    def to_bloch(self, rho: DensityMatrix) -> BlochVector:
        gamma = self.gell_mann(rho.dim).gamma
        # Tr(rho G_i) = sum_jk rho_jk (G_i)_kj
        components = np.real(np.einsum('jk,ikj->i', rho.entries, gamma)) / 2
        return BlochVector(rho.dim, components)

    def state_bloch(self, state: PureState) -> BlochVector:
        return self.to_bloch(self.linalg.projector(state))

    def from_bloch(self, b: BlochVector) -> Tuple[ComplexMatrix, bool]:
        """Return I/d + b . Gamma and whether it is a physical (PSD) operator."""
        d = b.dim
        matrix = np.eye(d, dtype=np.complex128) / d + np.einsum('i,ijk->jk', b.components, self.gell_mann(d).gamma)
        operator = ComplexMatrix(matrix, hermitian=True)
        physical = self.linalg.min_eigenvalue(operator) >= -PSD_TOL
        if not physical:
            logger.debug("Bloch vector of norm %.6f in d=%d is not a physical state", b.norm, d)
        return operator, physical

    def state_from_bloch(self, b: BlochVector) -> PureState:
        """The pure state with Bloch vector b; b must have the pure length and be physical."""
        operator, physical = self.from_bloch(b)
        if not physical or abs(b.norm - pure_length(b.dim)) > 1e-10:
            raise InvalidStateError(f"Bloch vector of norm {b.norm:.12g} is not a pure state in d={b.dim}")
        return self.linalg.top_eigenstate(operator)

    def from_qubit_bloch(self, r) -> BlochVector:
        """Convert a qubit-convention Bloch vector (|r| = 1 for pure states) to this normalization."""
        return BlochVector(2, np.asarray(r, dtype=np.float64) / 2)

    def overlap_via_bloch(self, b1: BlochVector, b2: BlochVector) -> float:
        """Tr(rho_1 rho_2) = 1/d + 2 b1 . b2."""
        if b1.dim != b2.dim:
            raise DimensionMismatchError(f"dimension {b1.dim} does not match {b2.dim}")
        return 1 / b1.dim + 2 * b1.dot(b2)
