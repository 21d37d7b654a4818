import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import BlochNormError, InvalidDimensionError

BLOCH_NORM_TOL = 1e-10


def pure_length(d: int) -> float:
    """Length of the Bloch vector of any pure state, sqrt((d-1)/(2d))."""
    return math.sqrt((d - 1) / (2 * d))


@dataclass(frozen=True, eq=False)
class GellMannBasis:
    """The d**2 - 1 generalized Gell-Mann matrices, stacked on axis 0.

    Order: symmetric pairs (j<k), antisymmetric pairs (j<k), diagonal.
    Normalization Tr(G_i G_j) = 2 delta_ij.
    """
    dim: int
    gamma: np.ndarray

    def __post_init__(self):
        expected = (self.dim * self.dim - 1, self.dim, self.dim)
        if self.gamma.shape != expected:
            raise InvalidDimensionError(f"expected stack of shape {expected}, got {self.gamma.shape}")
        self.gamma.setflags(write=False)

    def __len__(self) -> int:
        return self.gamma.shape[0]

    def __getitem__(self, index: int) -> np.ndarray:
        return self.gamma[index]


@dataclass(frozen=True, eq=False)
class BlochVector:
    """Real coefficients b of rho = I/d + b . Gamma."""
    dim: int
    components: np.ndarray

    def __post_init__(self):
        data = np.array(self.components, dtype=np.float64)
        if data.shape != (self.dim * self.dim - 1,):
            raise InvalidDimensionError(
                f"a d={self.dim} Bloch vector has {self.dim * self.dim - 1} components, got {data.shape}"
            )
        norm = float(np.linalg.norm(data))
        if norm > pure_length(self.dim) + BLOCH_NORM_TOL:
            raise BlochNormError(f"norm {norm:.12g} exceeds pure length {pure_length(self.dim):.12g}")
        data.setflags(write=False)
        object.__setattr__(self, 'components', data)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.components))

    def dot(self, other: 'BlochVector') -> float:
        return float(np.dot(self.components, other.components))
