from .gell_mann_repository import GellMannRepository
from .strategy_repository import InMemoryStrategyRepository

__all__ = ['GellMannRepository', 'InMemoryStrategyRepository']
