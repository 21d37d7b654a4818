import enum
import logging
from typing import List

import numpy as np

from ..exceptions import InvalidDimensionError
from ..models.bases import Basis
from ..models.linalg import PureState

logger = logging.getLogger(__name__)


class StreamPurpose(enum.IntEnum):
    SEARCH = 0
    REFINE = 1
    INPUT = 2


class SamplingService:
    """Seeded Haar sampling on counter-based Philox streams.

    Stream (purpose, task) of `seed` is Philox keyed by
    SeedSequence(seed, spawn_key=(purpose, task)); a parallel task draws the
    same numbers whichever worker runs it.
    """

    def stream(self, seed: int, task: int = 0, purpose: StreamPurpose = StreamPurpose.SEARCH) -> np.random.Generator:
        sequence = np.random.SeedSequence(seed, spawn_key=(int(purpose), task))
        return np.random.Generator(np.random.Philox(sequence))

    def gaussian_vectors(self, rng: np.random.Generator, shape, d: int) -> np.ndarray:
        """Haar-distributed unit vectors in C^d, stacked with leading `shape`."""
        if d < 2:
            raise InvalidDimensionError(f"d must be >= 2, got {d}")
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        z = rng.standard_normal(shape + (d,)) + 1j * rng.standard_normal(shape + (d,))
        return z / np.linalg.norm(z, axis=-1, keepdims=True)

    def random_pure_state(self, d: int, rng: np.random.Generator) -> PureState:
        return PureState(self.gaussian_vectors(rng, 1, d)[0])

    def random_pure_states(self, d: int, count: int, rng: np.random.Generator) -> List[PureState]:
        return [PureState(v) for v in self.gaussian_vectors(rng, count, d)]

    def random_basis_rows(self, rng: np.random.Generator, shape, d: int) -> np.ndarray:
        """Haar-random orthonormal row sets of shape `shape` + (d, d)."""
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        return orthonormalize(self.gaussian_vectors(rng, shape + (d,), d))

    def random_basis(self, d: int, rng: np.random.Generator, label: str = "haar") -> Basis:
        rows = self.random_basis_rows(rng, (), d)
        return Basis(tuple(PureState(row) for row in rows), label=label)


def orthonormalize(rows: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt over the last-but-one axis, each vector projected twice."""
    q = np.array(rows, dtype=np.complex128)
    for k in range(q.shape[-2]):
        for _ in range(2):
            for j in range(k):
                coef = np.sum(q[..., j, :].conj() * q[..., k, :], axis=-1, keepdims=True)
                q[..., k, :] -= coef * q[..., j, :]
        q[..., k, :] /= np.linalg.norm(q[..., k, :], axis=-1, keepdims=True)
    return q
