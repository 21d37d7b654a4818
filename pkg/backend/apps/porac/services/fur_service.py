import logging
import math
from typing import Tuple

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidDimensionError, NonUniformWeightsError
from ..models.bloch import BlochVector, pure_length
from ..models.fur import FurReport, OutcomeSet
from ..models.linalg import DensityMatrix, PureState
from .bloch_service import BlochService
from .linalg_service import LinalgService

logger = logging.getLogger(__name__)

SATURATION_TOL = 1e-9
DEGENERATE_TOL = 1e-12


def fur_bound_mub(n: int, d: int) -> float:
    """(1/d)(1 + (d-1)/sqrt(N)): FUR bound for N mutually unbiased bases."""
    if n < 1 or d < 2:
        raise InvalidDimensionError(f"need N >= 1 and d >= 2, got N={n}, d={d}")
    return (1 + (d - 1) / math.sqrt(n)) / d


class FurService:
    """Fine-grained uncertainty: certainty sums, analytic bounds and maximally certain states."""

    def __init__(self, linalg: LinalgService, bloch: BlochService):
        self.linalg = linalg
        self.bloch = bloch

    def certainty_sum(self, rho: DensityMatrix, s: OutcomeSet) -> float:
        """sum_i p(X_i) p(x_i|X_i)_rho."""
        if rho.dim != s.dim:
            raise DimensionMismatchError(f"state dimension {rho.dim} does not match outcomes {s.dim}")
        return math.fsum(w * self.linalg.born_probability(rho, x) for w, x in zip(s.weights, s.outcomes))

    def cosines(self, s: OutcomeSet) -> np.ndarray:
        """cos(theta_jk) between Bloch vectors, from (d |<x_j|x_k>|**2 - 1)/(d - 1)."""
        d = s.dim
        overlaps = np.abs(s.matrix.conj() @ s.matrix.T) ** 2
        return (d * overlaps - 1) / (d - 1)

    def effective_count(self, s: OutcomeSet) -> float:
        """N' = N + 2 sum_(j>k) cos(theta_jk)."""
        cos = self.cosines(s)
        upper = cos[np.triu_indices(s.size, k=1)]
        return s.size + 2 * math.fsum(upper)

    def fur_bound_general(self, s: OutcomeSet) -> FurReport:
        """Bound for N arbitrary observables chosen uniformly, with its Bloch-collinear candidate.

        The candidate b = sum_i x_i / sqrt(N') has the pure length; it is a state
        whenever I/d + b . Gamma is positive, which always holds for d = 2.
        """
        if not s.is_uniform:
            raise NonUniformWeightsError("the general bound is stated for a uniform choice of observables")
        d, n = s.dim, s.size
        n_eff = self.effective_count(s)

        if n_eff <= DEGENERATE_TOL:
            # sum of Bloch vectors vanishes: every b gives 1/d
            mixed = self.linalg.maximally_mixed(d)
            return FurReport(
                certainty=self.certainty_sum(mixed, s),
                bound=1 / d,
                maximizer=None,
                maximizer_physical=False,
                saturated=False,
                maximizer_density=mixed,
            )

        bound = (1 + (d - 1) * math.sqrt(n_eff) / n) / d
        total = np.sum([self.bloch.state_bloch(x).components for x in s.outcomes], axis=0)
        # |total| = sqrt(N') * pure length; clip rounding above the pure length
        b = total / math.sqrt(n_eff)
        b *= min(1.0, pure_length(d) / np.linalg.norm(b))
        candidate, physical = self.bloch.from_bloch(BlochVector(d, b))
        if not physical:
            logger.warning("Bloch-collinear candidate for %d outcomes in d=%d is not a physical state", n, d)
            return FurReport(certainty=None, bound=bound, maximizer=None, maximizer_physical=False, saturated=False)

        maximizer = self.linalg.top_eigenstate(candidate)
        rho = self.linalg.density_matrix(candidate.entries)
        certainty = self.certainty_sum(rho, s)
        return FurReport(
            certainty=certainty,
            bound=bound,
            maximizer=maximizer,
            maximizer_physical=True,
            saturated=abs(certainty - bound) <= SATURATION_TOL,
            maximizer_density=rho,
        )

    def tight_fur_two(self, x1: PureState, x2: PureState) -> FurReport:
        """Tight two-outcome bound (1 + |<x1|x2>|)/2 and the state attaining it."""
        overlap = self.linalg.inner(x1, x2)
        magnitude = abs(overlap)
        bound = (1 + magnitude) / 2
        phase = overlap / magnitude if magnitude > DEGENERATE_TOL else 1.0
        maximizer = PureState.from_vector(x1.amplitudes + np.conj(phase) * x2.amplitudes)
        rho = self.linalg.projector(maximizer)
        certainty = self.certainty_sum(rho, OutcomeSet.uniform((x1, x2)))
        angles = (self._angle(rho, x1), self._angle(rho, x2))
        return FurReport(
            certainty=certainty,
            bound=bound,
            maximizer=maximizer,
            maximizer_physical=True,
            saturated=abs(certainty - bound) <= SATURATION_TOL,
            maximizer_density=rho,
            landau_pollak_angles=angles,
        )

    def fur_bound_mub(self, n: int, d: int) -> float:
        return fur_bound_mub(n, d)

    def landau_pollak_check(self, rho: DensityMatrix, x1: PureState, x2: PureState) -> Tuple[float, float, bool]:
        """arccos<x1> + arccos<x2> >= arccos|<x1|x2>| with <x> = sqrt(Tr rho |x><x|)."""
        lhs = self._angle(rho, x1) + self._angle(rho, x2)
        rhs = math.acos(min(1.0, abs(self.linalg.inner(x1, x2))))
        return lhs, rhs, lhs >= rhs - SATURATION_TOL

    def _angle(self, rho: DensityMatrix, x: PureState) -> float:
        return math.acos(min(1.0, math.sqrt(self.linalg.born_probability(rho, x))))
