import cmath
import math

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidDimensionError
from ..models.bases import Basis, MubFamily
from ..models.linalg import ComplexMatrix, PureState


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def omega(d: int) -> complex:
    return cmath.exp(2j * math.pi / d)


class BasisService:
    """Measurement bases: computational, Fourier, Weyl-Heisenberg MUB families."""

    def computational_basis(self, d: int) -> Basis:
        self._check_dim(d)
        return Basis(tuple(PureState.basis_state(d, k) for k in range(d)), label="computational")

    def fourier_basis(self, d: int) -> Basis:
        """e_p = d**-1/2 sum_q w**(pq) |q>."""
        self._check_dim(d)
        q = np.arange(d)
        vectors = tuple(PureState(np.exp(2j * np.pi * p * q / d) / math.sqrt(d)) for p in range(d))
        return Basis(vectors, label="fourier")

    def shift_X(self, d: int) -> ComplexMatrix:
        """X = sum_q |q+1 mod d><q|."""
        self._check_dim(d)
        return ComplexMatrix(np.roll(np.eye(d), 1, axis=0))

    def clock_Z(self, d: int) -> ComplexMatrix:
        """Z = sum_q w**q |q><q|."""
        self._check_dim(d)
        return ComplexMatrix(np.diag(np.exp(2j * np.pi * np.arange(d) / d)))

    def overlaps(self, a: Basis, b: Basis) -> np.ndarray:
        """|<a_i|b_j>|**2 as a d x d array."""
        if a.dim != b.dim:
            raise DimensionMismatchError(f"dimension {a.dim} does not match {b.dim}")
        return np.abs(a.matrix.conj() @ b.matrix.T) ** 2

    def is_mub(self, a: Basis, b: Basis, tol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.overlaps(a, b) - 1 / a.dim)) <= tol)

    def weyl_eigenbasis(self, d: int, k: int) -> Basis:
        """Eigenbasis of X Z**k.

        X Z**k |v> = lam |v> gives c_(q+1) = c_q w**(kq) / lam, hence
        c_q = lam**-q w**(k q(q-1)/2) / sqrt(d) with lam**d = w**(k d(d-1)/2).
        """
        self._check_dim(d)
        q = np.arange(d)
        chirp = np.exp(2j * np.pi * k * (q * (q - 1) // 2) / d)
        base = cmath.exp(1j * math.pi * k * (d - 1) / d)
        vectors = []
        for j in range(d):
            lam = base * omega(d) ** (-j)
            vectors.append(PureState(lam ** (-q) * chirp / math.sqrt(d)))
        return Basis(tuple(vectors), label=f"XZ^{k}")

    def mub_family_prime(self, d: int, count: int) -> MubFamily:
        """`count` MUBs: the eigenbasis of Z, then of X Z**k for k = 0..count-2."""
        if not is_prime(d):
            raise InvalidDimensionError(f"the Weyl-Heisenberg MUB family needs a prime d, got {d}")
        if not 2 <= count <= d + 1:
            raise InvalidDimensionError(f"a prime d={d} has between 2 and {d + 1} MUBs, asked for {count}")
        bases = [self.computational_basis(d)]
        bases.extend(self.weyl_eigenbasis(d, k) for k in range(count - 1))
        return MubFamily(tuple(bases))

    def mub_pair(self, d: int) -> MubFamily:
        """Computational and Fourier bases, mutually unbiased in every d."""
        return MubFamily((self.computational_basis(d), self.fourier_basis(d)))

    def basis_from_matrix(self, rows: np.ndarray, label: str = "") -> Basis:
        return Basis(tuple(PureState(row) for row in rows), label=label)

    @staticmethod
    def _check_dim(d: int):
        if d < 2:
            raise InvalidDimensionError(f"d must be >= 2, got {d}")
