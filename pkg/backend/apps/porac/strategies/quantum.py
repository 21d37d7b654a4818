from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidDimensionError
from ..interfaces.strategy import StrategyInterface
from ..models.bases import Basis
from ..models.game import Dits, PoracGame
from ..models.linalg import PureState


@dataclass(frozen=True, eq=False)
class QuantumStrategy(StrategyInterface):
    """Pure-state encoding of every string plus one decoding basis per question."""
    game: PoracGame
    states: Tuple[PureState, ...]
    decode: Tuple[Basis, ...]
    label: str = "quantum"

    def __post_init__(self):
        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'decode', tuple(self.decode))
        if len(self.states) != self.game.size:
            raise InvalidDimensionError(f"{len(self.states)} encodings for {self.game.size} strings")
        if len(self.decode) != self.game.n:
            raise InvalidDimensionError(f"{len(self.decode)} decoding bases for {self.game.n} questions")
        dims = {s.dim for s in self.states} | {b.dim for b in self.decode}
        if dims != {self.game.d}:
            raise DimensionMismatchError(f"strategy mixes dimensions {sorted(dims)} in a d={self.game.d} game")

    def encode(self, x: Dits) -> PureState:
        return self.states[self.game.index(x)]

    @property
    def amplitudes(self) -> np.ndarray:
        """Encoded states as rows of a (d**N, d) array."""
        return np.stack([s.amplitudes for s in self.states])

    def response_probabilities(self) -> np.ndarray:
        psi = self.amplitudes
        table = np.empty((self.game.size, self.game.n, self.game.d))
        for y, basis in enumerate(self.decode):
            table[:, y, :] = np.abs(psi @ basis.matrix.conj().T) ** 2
        return table

    def encoded_density_matrices(self) -> np.ndarray:
        psi = self.amplitudes
        return np.einsum('xi,xj->xij', psi, psi.conj())
