from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidDimensionError, NotHermitianError, NotNormalizedError, InvalidStateError

HERMITIAN_TOL = 1e-12
NORM_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


def _frozen(array) -> np.ndarray:
    data = np.array(array, dtype=np.complex128)
    data.setflags(write=False)
    return data


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """Dense d x d complex matrix."""
    entries: np.ndarray
    hermitian: bool = False

    def __post_init__(self):
        data = _frozen(self.entries)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] < 1:
            raise InvalidDimensionError(f"expected a square matrix, got shape {data.shape}")
        if self.hermitian:
            deviation = np.max(np.abs(data - data.conj().T))
            if deviation > HERMITIAN_TOL:
                raise NotHermitianError(f"matrix deviates from its adjoint by {deviation:.3e}")
        object.__setattr__(self, 'entries', data)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.entries))


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm amplitude vector of length d."""
    amplitudes: np.ndarray

    def __post_init__(self):
        data = _frozen(self.amplitudes)
        if data.ndim != 1 or data.shape[0] < 1:
            raise InvalidDimensionError(f"expected a vector, got shape {data.shape}")
        norm = np.linalg.norm(data)
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalizedError(f"state norm is {norm!r}")
        object.__setattr__(self, 'amplitudes', data)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    @classmethod
    def from_vector(cls, vector) -> 'PureState':
        """Normalize `vector` and fix its global phase."""
        data = np.asarray(vector, dtype=np.complex128)
        norm = np.linalg.norm(data)
        if norm == 0:
            raise NotNormalizedError("cannot normalize the zero vector")
        return cls(canonical_phase(data / norm))

    @classmethod
    def basis_state(cls, d: int, k: int) -> 'PureState':
        if not 0 <= k < d:
            raise InvalidDimensionError(f"basis index {k} out of range for d={d}")
        data = np.zeros(d, dtype=np.complex128)
        data[k] = 1.0
        return cls(data)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite operator.

    Positivity is checked by LinalgService.density_matrix, which owns the
    eigensolver; constructing one directly only checks Hermiticity and trace.
    """
    matrix: ComplexMatrix

    def __post_init__(self):
        if not self.matrix.hermitian:
            object.__setattr__(self, 'matrix', ComplexMatrix(self.matrix.entries, hermitian=True))
        trace = self.matrix.trace()
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace is {trace!r}")

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries


def canonical_phase(vector: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the first nonzero amplitude is real positive."""
    nonzero = np.flatnonzero(np.abs(vector) > 1e-12)
    if nonzero.size == 0:
        return vector
    lead = vector[nonzero[0]]
    return vector * (abs(lead) / lead)
