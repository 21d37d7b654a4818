from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from ..exceptions import InvalidDimensionError
from ..interfaces.strategy import StrategyInterface
from ..models.game import PoracGame

Distribution = Tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class ClassicalStrategy(StrategyInterface):
    """Alice sends one dit `messages[x]`; Bob answers question y with `guesses[y][m]`.

    guesses[y][m] is a distribution over the d possible answers, held as exact
    fractions so the success probability is rational.
    """
    game: PoracGame
    messages: Tuple[int, ...]
    guesses: Tuple[Tuple[Distribution, ...], ...]
    label: str = "classical"

    def __post_init__(self):
        d = self.game.d
        if len(self.messages) != self.game.size or any(not 0 <= m < d for m in self.messages):
            raise InvalidDimensionError("one message dit per string is required")
        if len(self.guesses) != self.game.n or any(len(row) != d for row in self.guesses):
            raise InvalidDimensionError("one answer distribution per (question, message) is required")
        for row in self.guesses:
            for dist in row:
                if len(dist) != d or sum(dist) != 1 or min(dist) < 0:
                    raise InvalidDimensionError(f"{dist} is not a distribution over {d} answers")

    def success(self) -> Fraction:
        """Exact average probability of answering x_y over uniform x and y."""
        total = Fraction(0)
        for x, m in zip(self.game.strings(), self.messages):
            for y in range(self.game.n):
                total += self.guesses[y][m][int(x[y])]
        return total / (self.game.size * self.game.n)

    def response_probabilities(self) -> np.ndarray:
        table = np.array([[[float(p) for p in dist] for dist in row] for row in self.guesses])
        messages = np.array(self.messages)
        # table[y, m, b] -> (x, y, b)
        return np.transpose(table[:, messages, :], (1, 0, 2))

    def encoded_density_matrices(self) -> np.ndarray:
        rho = np.zeros((self.game.size, self.game.d, self.game.d), dtype=np.complex128)
        rho[np.arange(self.game.size), self.messages, self.messages] = 1.0
        return rho
