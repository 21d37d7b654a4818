from .classical import ClassicalStrategy
from .quantum import QuantumStrategy

__all__ = ['ClassicalStrategy', 'QuantumStrategy']
