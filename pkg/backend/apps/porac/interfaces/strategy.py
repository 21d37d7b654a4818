from abc import ABC, abstractmethod

import numpy as np

from ..models.game import PoracGame


class StrategyInterface(ABC):
    """Interface for an encoding/decoding strategy of a PORAC game.

    Implementations expose the game they play as `game` and a short report
    name as `label`.
    """
    game: PoracGame
    label: str

    @abstractmethod
    def response_probabilities(self) -> np.ndarray:
        """p(b|x,y) as an array of shape (d**N, N, d), strings in PoracGame.strings() order."""
        pass

    @abstractmethod
    def encoded_density_matrices(self) -> np.ndarray:
        """Prepared states rho_x as an array of shape (d**N, d, d)."""
        pass
