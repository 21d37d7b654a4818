import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..exceptions import InvalidDimensionError, SizeLimitError

Dits = Tuple[int, ...]


@dataclass(frozen=True)
class PoracGame:
    """N -> 1 random access code over the alphabet {0, ..., d-1}."""
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidDimensionError(f"N must be >= 1, got {self.n}")
        if self.d < 2:
            raise InvalidDimensionError(f"d must be >= 2, got {self.d}")

    @property
    def size(self) -> int:
        """Number of strings, d**N."""
        return self.d ** self.n

    def require_enumerable(self, limit: int, per_string: int = 1, what: str = "enumeration"):
        needed = self.size * per_string
        if needed > limit:
            raise SizeLimitError(f"{what} of the {self.n}->1 d={self.d} game", needed, limit)

    def strings(self) -> np.ndarray:
        """All strings as rows of a (d**N, N) integer array in lexicographic order."""
        return np.array(list(itertools.product(range(self.d), repeat=self.n)), dtype=np.int64).reshape(
            self.size, self.n
        )

    def index(self, x: Dits) -> int:
        """Row of `x` in strings()."""
        if len(x) != self.n or any(not 0 <= dit < self.d for dit in x):
            raise InvalidDimensionError(f"{x} is not a string of the {self.n}->1 d={self.d} game")
        rank = 0
        for dit in x:
            rank = rank * self.d + dit
        return rank

    def __str__(self) -> str:
        return f"{self.n}->1 d={self.d}"


class ParityConvention(str, enum.Enum):
    """Which strings s define a parity x.s (mod d) that must stay hidden.

    PAPER keeps s with at most d-2 zero entries; HAMMING2 keeps s with at least
    two nonzero entries.
    """
    PAPER = 'paper'
    HAMMING2 = 'hamming2'


@dataclass(frozen=True)
class ParitySet:
    game: PoracGame
    elements: Tuple[Dits, ...]
    convention: ParityConvention

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


class ObliviousnessLevel(str, enum.Enum):
    MEASUREMENT = 'measurement'
    STATE = 'state'


@dataclass(frozen=True)
class ObliviousnessReport:
    """Outcome of a parity-obliviousness audit.

    `witness` identifies the worst comparison: (s, y, b, l, l') at measurement
    level, (s, l, l') at state level.
    """
    level: ObliviousnessLevel
    convention: ParityConvention
    tol: float
    max_violation: float
    witness: Optional[tuple]
    comparisons: int

    @property
    def passed(self) -> bool:
        return self.max_violation <= self.tol
