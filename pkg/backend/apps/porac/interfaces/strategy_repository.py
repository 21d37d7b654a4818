from abc import ABC, abstractmethod
from typing import List

from ..models.game import PoracGame
from .strategy import StrategyInterface


class StrategyRepositoryInterface(ABC):
    """Interface for looking up named strategies."""

    @abstractmethod
    def names(self) -> List[str]:
        """All registered strategy names."""
        pass

    @abstractmethod
    def find_by_name(self, name: str, game: PoracGame) -> StrategyInterface:
        """Build the strategy `name` for `game`."""
        pass

    @abstractmethod
    def expected_success(self, name: str, game: PoracGame) -> float:
        """Closed-form success probability of strategy `name` on `game`."""
        pass
