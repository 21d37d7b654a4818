import math
from typing import Callable, Dict, List

from ..exceptions import UnsupportedStrategyError
from ..interfaces.strategy import StrategyInterface
from ..interfaces.strategy_repository import StrategyRepositoryInterface
from ..models.game import PoracGame


class InMemoryStrategyRepository(StrategyRepositoryInterface):
    """Named strategies, built on demand by a PoracService."""

    def __init__(self, porac_service):
        self.porac = porac_service
        self._builders: Dict[str, Callable[[PoracGame], StrategyInterface]] = {
            'paper2d': lambda game: self.porac.paper_2d_strategy(game.d),
            'qubit3to1': lambda game: self.porac.qubit_3to1_strategy(),
            'qubit2to1': lambda game: self.porac.qubit_2to1_strategy(),
            'naive': lambda game: self.porac.naive_strategy(game.n, game.d),
            'classical': lambda game: self.porac.classical_po_strategy(game.n, game.d)[0],
        }
        self._applies: Dict[str, Callable[[PoracGame], bool]] = {
            'paper2d': lambda game: game.n == 2,
            'qubit3to1': lambda game: (game.n, game.d) == (3, 2),
            'qubit2to1': lambda game: (game.n, game.d) == (2, 2),
        }

    def names(self) -> List[str]:
        return list(self._builders)

    def find_by_name(self, name: str, game: PoracGame) -> StrategyInterface:
        self._require(name, game)
        return self._builders[name](game)

    def expected_success(self, name: str, game: PoracGame) -> float:
        """Closed-form success probability of the named strategy."""
        self._require(name, game)
        if name == 'paper2d':
            return (1 + 1 / math.sqrt(game.d)) / 2
        if name in ('qubit3to1', 'qubit2to1'):
            return (1 + 1 / math.sqrt(game.n)) / 2
        if name == 'classical':
            return float(self.porac.noncontextual_bound(game.n, game.d))
        # naive: the sum equals x_y iff the other dits sum to 0 mod d
        return 1.0 if game.n == 1 else 1 / game.d

    def _require(self, name: str, game: PoracGame):
        if name not in self._builders:
            raise UnsupportedStrategyError(f"unknown strategy '{name}', choose from {', '.join(self.names())}")
        applies = self._applies.get(name)
        if applies is not None and not applies(game):
            raise UnsupportedStrategyError(f"strategy '{name}' does not apply to the {game} game")
