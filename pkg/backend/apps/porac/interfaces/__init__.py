from .eigensolver import EigensolverInterface
from .strategy import StrategyInterface
from .strategy_repository import StrategyRepositoryInterface

__all__ = [
    'EigensolverInterface',
    'StrategyInterface',
    'StrategyRepositoryInterface'
]
