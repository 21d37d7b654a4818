from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..exceptions import InvalidDimensionError
from .bases import Basis
from .linalg import PureState


@dataclass(frozen=True)
class SearchConfig:
    """Sampling budget of a brute-force search.

    Results depend only on (seed, samples, refine); `threads` changes the
    schedule, never the output.
    """
    samples: int = 10_000
    seed: int = 0
    refine: bool = True
    tol: float = 1e-3
    threads: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidDimensionError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise InvalidDimensionError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True, eq=False)
class CertaintySearchResult:
    value: float
    state: PureState
    exact_maximum: float


@dataclass(frozen=True, eq=False)
class PoracSearchResult:
    value: float
    bases: Tuple[Basis, ...]
    bound: float


@dataclass(frozen=True)
class ClassicalRacResult:
    """Best deterministic classical strategy, not constrained by parity obliviousness."""
    best: Fraction
    messages: Tuple[int, ...]
    answers: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PhiReport:
    phi: float
    phi_bound: float
    implied_success: float
    quantum_bound: float
    tol: float = 1e-9
    saturated: bool = field(default=False)

    @property
    def passed(self) -> bool:
        return self.phi <= self.phi_bound + self.tol and self.implied_success <= self.quantum_bound + self.tol


@dataclass(frozen=True)
class Lemma3Report:
    value: float
    formula: float
    tol: float = 1e-9

    @property
    def passed(self) -> bool:
        return abs(self.value - self.formula) <= self.tol
