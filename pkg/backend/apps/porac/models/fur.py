import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidDimensionError
from .linalg import DensityMatrix, PureState

WEIGHT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OutcomeSet:
    """One chosen outcome vector |x_i> per observable X_i, with the choice distribution p(X_i)."""
    outcomes: Tuple[PureState, ...]
    weights: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, 'outcomes', tuple(self.outcomes))
        object.__setattr__(self, 'weights', tuple(float(w) for w in self.weights))
        if not self.outcomes:
            raise InvalidDimensionError("an outcome set needs at least one outcome")
        if len(self.weights) != len(self.outcomes):
            raise InvalidDimensionError("one weight per outcome is required")
        if len({x.dim for x in self.outcomes}) > 1:
            raise DimensionMismatchError("outcome vectors have different dimensions")
        if min(self.weights) < 0 or abs(math.fsum(self.weights) - 1.0) > WEIGHT_TOL:
            raise InvalidDimensionError(f"weights {self.weights} are not a distribution")

    @classmethod
    def uniform(cls, outcomes: Sequence[PureState]) -> 'OutcomeSet':
        outcomes = tuple(outcomes)
        return cls(outcomes, tuple([1.0 / len(outcomes)] * len(outcomes)))

    @property
    def dim(self) -> int:
        return self.outcomes[0].dim

    @property
    def size(self) -> int:
        return len(self.outcomes)

    @property
    def is_uniform(self) -> bool:
        return all(abs(w - 1.0 / self.size) <= WEIGHT_TOL for w in self.weights)

    @property
    def matrix(self) -> np.ndarray:
        """Outcome vectors as rows of an N x d array."""
        return np.stack([x.amplitudes for x in self.outcomes])


@dataclass(frozen=True, eq=False)
class FurReport:
    """Analytic fine-grained bound together with its candidate maximizer.

    `certainty` is the certainty sum of the returned maximizer; it is None
    when the analytic candidate is not a physical state.
    """
    certainty: Optional[float]
    bound: float
    maximizer: Optional[PureState]
    maximizer_physical: bool
    saturated: bool
    maximizer_density: Optional[DensityMatrix] = None
    landau_pollak_angles: Optional[Tuple[float, float]] = None
