"""Errors raised by the PORAC bench services."""


class PoracError(Exception):
    """Base class for every error raised by apps.porac."""


class DimensionMismatchError(PoracError, ValueError):
    """Operands live in Hilbert spaces of different dimension."""


class NotNormalizedError(PoracError, ValueError):
    """A pure state deviates from unit norm."""


class NotHermitianError(PoracError, ValueError):
    """A matrix expected to be Hermitian is not."""


class InvalidStateError(PoracError, ValueError):
    """A density matrix violates the trace or positivity invariants."""


class BlochNormError(PoracError, ValueError):
    """A Bloch vector is longer than the pure-state length."""


class InvalidDimensionError(PoracError, ValueError):
    """A dimension, game size or dit is out of range."""


class NonUniformWeightsError(PoracError, ValueError):
    """The general fine-grained bound only covers a uniform choice of observables."""


class SizeLimitError(PoracError):
    """An exhaustive computation exceeds its enumeration limit."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what} needs {size} evaluations, limit is {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class UnsupportedStrategyError(PoracError):
    """A named strategy does not apply to the requested game."""


class ConvergenceError(PoracError):
    """An iterative routine did not converge."""
