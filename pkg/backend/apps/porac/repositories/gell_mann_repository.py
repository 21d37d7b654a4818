import threading
from typing import Dict

import numpy as np

from ..exceptions import InvalidDimensionError
from ..models.bloch import GellMannBasis


class GellMannRepository:
    """Read-only table of generalized Gell-Mann bases, built once per dimension."""

    def __init__(self):
        self._bases: Dict[int, GellMannBasis] = {}
        self._lock = threading.Lock()

    def find_by_dim(self, d: int) -> GellMannBasis:
        """Get the Gell-Mann basis of dimension d."""
        basis = self._bases.get(d)
        if basis is None:
            with self._lock:
                basis = self._bases.get(d)
                if basis is None:
                    basis = self._bases[d] = self._build(d)
        return basis

    @staticmethod
    def _build(d: int) -> GellMannBasis:
        if d < 2:
            raise InvalidDimensionError(f"Gell-Mann matrices need d >= 2, got {d}")
        pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
        gamma = np.zeros((d * d - 1, d, d), dtype=np.complex128)
        index = 0
        for j, k in pairs:
            gamma[index, j, k] = gamma[index, k, j] = 1
            index += 1
        for j, k in pairs:
            gamma[index, j, k] = -1j
            gamma[index, k, j] = 1j
            index += 1
        for l in range(1, d):
            diagonal = np.zeros(d)
            diagonal[:l] = 1
            diagonal[l] = -l
            gamma[index] = np.sqrt(2 / (l * (l + 1))) * np.diag(diagonal)
            index += 1
        return GellMannBasis(d, gamma)
