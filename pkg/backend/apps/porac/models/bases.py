from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidDimensionError
from .linalg import PureState

ORTHONORMAL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Basis:
    """Ordered orthonormal basis; vector k is the projector of outcome k."""
    vectors: Tuple[PureState, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, 'vectors', tuple(self.vectors))
        d = self.vectors[0].dim if self.vectors else 0
        if len(self.vectors) != d or d < 1:
            raise InvalidDimensionError(f"a basis of C^{d} needs {d} vectors, got {len(self.vectors)}")
        if any(v.dim != d for v in self.vectors):
            raise DimensionMismatchError("basis vectors have different dimensions")
        rows = self.matrix
        gram = rows.conj() @ rows.T
        deviation = np.max(np.abs(gram - np.eye(d)))
        if deviation > ORTHONORMAL_TOL:
            raise InvalidDimensionError(f"basis '{self.label}' is not orthonormal (deviation {deviation:.3e})")
        completeness = rows.T @ rows.conj()
        deviation = np.max(np.abs(completeness - np.eye(d)))
        if deviation > ORTHONORMAL_TOL:
            raise InvalidDimensionError(f"basis '{self.label}' is not complete (deviation {deviation:.3e})")

    @property
    def dim(self) -> int:
        return self.vectors[0].dim

    @property
    def matrix(self) -> np.ndarray:
        """Basis vectors as the rows of a d x d array."""
        return np.stack([v.amplitudes for v in self.vectors])

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, outcome: int) -> PureState:
        return self.vectors[outcome]


@dataclass(frozen=True, eq=False)
class MubFamily:
    """Pairwise mutually unbiased bases of one dimension."""
    bases: Tuple[Basis, ...]

    def __post_init__(self):
        object.__setattr__(self, 'bases', tuple(self.bases))
        if len({b.dim for b in self.bases}) > 1:
            raise DimensionMismatchError("MUB family mixes dimensions")

    @property
    def dim(self) -> int:
        return self.bases[0].dim

    def __len__(self) -> int:
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __getitem__(self, index: int) -> Basis:
        return self.bases[index]
