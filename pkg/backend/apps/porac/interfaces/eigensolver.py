from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np


class EigensolverInterface(ABC):
    """Interface for Hermitian eigendecomposition."""

    @abstractmethod
    def eigh(self, matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Return ascending real eigenvalues and the matching eigenvectors as columns."""
        pass
