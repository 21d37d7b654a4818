import itertools
import logging
import math
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import InvalidDimensionError, UnsupportedStrategyError
from ..interfaces.strategy import StrategyInterface
from ..models.bases import Basis
from ..models.game import (
    ObliviousnessLevel,
    ObliviousnessReport,
    ParityConvention,
    ParitySet,
    PoracGame,
)
from ..models.linalg import PureState
from ..strategies import ClassicalStrategy, QuantumStrategy
from .basis_service import BasisService, omega
from .bloch_service import BlochService
from .fur_service import fur_bound_mub
from .linalg_service import LinalgService
from .parallel import chunks, map_ordered, ordered_sum

logger = logging.getLogger(__name__)

PAULI_AXES = {'x': 0, 'y': 1, 'z': 2}


class PoracService:
    """The N -> 1 d-level parity-oblivious random access code game."""

    def __init__(
        self,
        linalg: LinalgService,
        bloch: BlochService,
        bases: BasisService,
        max_strings: int = 10**6,
        max_born_evaluations: int = 10**7,
    ):
        self.linalg = linalg
        self.bloch = bloch
        self.bases = bases
        self.max_strings = max_strings
        self.max_born_evaluations = max_born_evaluations

    # Encodings

    def encode_2d(self, x0: int, x1: int, d: int) -> PureState:
        """X**x0 Z**x1 |psi_00>, |psi_00> = (|0> + |e_0>)/N_d."""
        self._check_dits((x0, x1), d)
        q = np.arange(d)
        norm = math.sqrt(2 + 2 / math.sqrt(d))
        psi00 = (np.eye(d)[0] + np.ones(d) / math.sqrt(d)) / norm
        # Z**x1 multiplies |q> by w**(x1 q), X**x0 moves it to |q + x0>
        source = (q - x0) % d
        amplitudes = psi00[source] * np.exp(2j * np.pi * x1 * source / d)
        return PureState(amplitudes)

    def decode_prob_closed_form(self, x0: int, x1: int, p: int, which: str, d: int) -> float:
        """Probability of answer p when Bob measures the first (computational) or second (Fourier) basis."""
        self._check_dits((x0, x1, p), d)
        n_sq = 2 + 2 / math.sqrt(d)
        w = omega(d)
        if which == 'first':
            amplitude = (p == x0) + w ** (x1 * (p - x0)) / math.sqrt(d)
        elif which == 'second':
            amplitude = (p == x1) + w ** (x0 * (x1 - p)) / math.sqrt(d)
        else:
            raise InvalidDimensionError(f"which must be 'first' or 'second', got {which!r}")
        return abs(amplitude) ** 2 / n_sq

    def paper_2d_strategy(self, d: int) -> QuantumStrategy:
        game = PoracGame(2, d)
        states = tuple(self.encode_2d(int(x0), int(x1), d) for x0, x1 in game.strings())
        decode = (self.bases.computational_basis(d), self.bases.fourier_basis(d))
        return QuantumStrategy(game, states, decode, label="paper2d")

    def qubit_bloch_strategy(self, axes: Sequence[str], label: str = "") -> QuantumStrategy:
        """Qubit encoding of N = len(axes) bits: Bloch component along axes[i] is (-1)**x_i / sqrt(N).

        Components are in the qubit convention |r| = 1 and are halved on the
        way in; Bob measures the Pauli along axes[i], outcome 0 for the + eigenvalue.
        """
        if not axes or len(set(axes)) != len(axes) or any(a not in PAULI_AXES for a in axes):
            raise InvalidDimensionError(f"axes must be distinct names from x, y, z, got {axes}")
        game = PoracGame(len(axes), 2)
        scale = 1 / math.sqrt(len(axes))
        states = []
        for x in game.strings():
            r = np.zeros(3)
            for bit, axis in zip(x, axes):
                r[PAULI_AXES[axis]] = scale * (-1) ** int(bit)
            states.append(self.bloch.state_from_bloch(self.bloch.from_qubit_bloch(r)))
        decode = tuple(self.pauli_basis(axis) for axis in axes)
        return QuantumStrategy(game, tuple(states), decode, label=label or f"qubit{len(axes)}to1")

    def qubit_3to1_strategy(self) -> QuantumStrategy:
        return self.qubit_bloch_strategy(('x', 'y', 'z'), label="qubit3to1")

    def qubit_2to1_strategy(self) -> QuantumStrategy:
        return self.qubit_bloch_strategy(('y', 'z'), label="qubit2to1")

    def pauli_basis(self, axis: str) -> Basis:
        s = 1 / math.sqrt(2)
        rows = {
            'x': [[s, s], [s, -s]],
            'y': [[s, 1j * s], [s, -1j * s]],
            'z': [[1, 0], [0, 1]],
        }[axis]
        return self.bases.basis_from_matrix(np.array(rows, dtype=np.complex128), label=f"sigma_{axis}")

    def naive_strategy(self, n: int, d: int) -> QuantumStrategy:
        """Sends |x_0 + ... + x_(N-1) mod d> and reads every question in the computational basis.

        The total parity reaches Bob unchanged, so this encoding is not parity oblivious.
        """
        game = PoracGame(n, d)
        totals = game.strings().sum(axis=1) % d
        states = tuple(PureState.basis_state(d, int(t)) for t in totals)
        decode = tuple(self.bases.computational_basis(d) for _ in range(n))
        return QuantumStrategy(game, states, decode, label="naive")

    def classical_po_strategy(self, n: int, d: int) -> Tuple[ClassicalStrategy, Fraction]:
        """Alice sends x_0; Bob returns it for question 0 and guesses uniformly otherwise."""
        game = PoracGame(n, d)
        game.require_enumerable(self.max_strings, what="classical strategy table")
        messages = tuple(int(x0) for x0 in game.strings()[:, 0])
        uniform = tuple([Fraction(1, d)] * d)
        exact = tuple(tuple(Fraction(int(b == m)) for b in range(d)) for m in range(d))
        guesses = (exact,) + tuple(tuple([uniform] * d) for _ in range(n - 1))
        strategy = ClassicalStrategy(game, messages, guesses)
        return strategy, strategy.success()

    # Success and bounds

    def success_probability(self, strategy: StrategyInterface, threads: int = 1) -> float:
        """Average of p(b = x_y | x, y) over uniform x and y."""
        game = strategy.game
        game.require_enumerable(self.max_strings, what="string enumeration")
        game.require_enumerable(self.max_born_evaluations, per_string=game.n, what="Born evaluation")
        table = strategy.response_probabilities()
        strings = game.strings()
        questions = np.arange(game.n)

        def partial(rows: range) -> float:
            idx = np.arange(rows.start, rows.stop)
            correct = table[idx[:, None], questions[None, :], strings[idx]]
            return ordered_sum(correct.ravel())

        total = ordered_sum(map_ordered(partial, chunks(game.size), threads))
        value = total / (game.size * game.n)
        logger.info("%s on %s: success %.12g", strategy.label, game, value)
        return value

    def noncontextual_bound(self, n: int, d: int) -> Fraction:
        self._check_game(n, d)
        return Fraction(n + d - 1, d * n)

    def quantum_upper_bound(self, n: int, d: int) -> float:
        return fur_bound_mub(n, d)

    # Parity obliviousness

    def parity_set(self, game: PoracGame, convention: ParityConvention) -> ParitySet:
        convention = ParityConvention(convention)
        elements = []
        for s in itertools.product(range(game.d), repeat=game.n):
            nonzero = sum(1 for dit in s if dit)
            if nonzero == 0:
                continue
            if convention is ParityConvention.PAPER and game.n - nonzero > game.d - 2:
                continue
            if convention is ParityConvention.HAMMING2 and nonzero < 2:
                continue
            elements.append(s)
        return ParitySet(game, tuple(elements), convention)

    def parity_oblivious_measurement_check(
        self, strategy: StrategyInterface, parity: ParitySet, tol: float = 1e-10, threads: int = 1
    ) -> ObliviousnessReport:
        """Compare class-conditional response distributions (1/|C_l|) sum_(x in C_l) p(b|x,y)."""
        game = self._audited_game(strategy, parity)
        table = strategy.response_probabilities().reshape(game.size, game.n * game.d)

        def audit(s) -> Tuple[float, tuple, int]:
            labels, averages = self._class_averages(game, s, table)
            spread = averages.max(axis=0) - averages.min(axis=0)
            worst = int(np.argmax(spread))
            y, b = divmod(worst, game.d)
            hi = labels[int(np.argmax(averages[:, worst]))]
            lo = labels[int(np.argmin(averages[:, worst]))]
            pairs = len(labels) * (len(labels) - 1) // 2
            return float(spread[worst]), (s, y, b, hi, lo), pairs * game.n * game.d

        return self._report(strategy, parity, tol, ObliviousnessLevel.MEASUREMENT, audit, threads)

    def parity_oblivious_state_check(
        self, strategy: StrategyInterface, parity: ParitySet, tol: float = 1e-10, threads: int = 1
    ) -> ObliviousnessReport:
        """Compare uniform averages of the encoded density matrices over each parity class."""
        game = self._audited_game(strategy, parity)
        rho = strategy.encoded_density_matrices().reshape(game.size, game.d * game.d)

        def audit(s) -> Tuple[float, tuple, int]:
            labels, averages = self._class_averages(game, s, rho)
            diff = np.abs(averages[:, None, :] - averages[None, :, :]).max(axis=2)
            i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
            pairs = len(labels) * (len(labels) - 1) // 2
            return float(diff[i, j]), (s, labels[i], labels[j]), pairs

        return self._report(strategy, parity, tol, ObliviousnessLevel.STATE, audit, threads)

    def _class_averages(self, game: PoracGame, s, values: np.ndarray) -> Tuple[list, np.ndarray]:
        """Mean of `values` rows over each nonempty class x . s = l (mod d)."""
        labels = game.strings() @ np.asarray(s, dtype=np.int64) % game.d
        onehot = (labels[:, None] == np.arange(game.d)[None, :]).astype(np.float64)
        counts = onehot.sum(axis=0)
        present = np.flatnonzero(counts)
        sums = onehot[:, present].T @ values
        return [int(l) for l in present], sums / counts[present][:, None]

    def _report(self, strategy, parity, tol, level, audit, threads) -> ObliviousnessReport:
        logger.info("%s-level audit of %s on %s (%s, %d parities)",
                    level.value, strategy.label, strategy.game, parity.convention.value, len(parity))
        results = map_ordered(audit, parity.elements, threads)
        worst, witness, comparisons = 0.0, None, 0
        for violation, candidate, count in results:
            comparisons += count
            if count and (witness is None or violation > worst):
                worst, witness = violation, candidate
        report = ObliviousnessReport(level, parity.convention, tol, worst, witness, comparisons)
        if not report.passed:
            logger.warning("%s leaks parity at %s level: violation %.3e at %s",
                           strategy.label, level.value, worst, witness)
        return report

    def _audited_game(self, strategy: StrategyInterface, parity: ParitySet) -> PoracGame:
        game = strategy.game
        if parity.game != game:
            raise UnsupportedStrategyError(f"parity set of {parity.game} does not fit a strategy on {game}")
        game.require_enumerable(self.max_strings, what="parity audit")
        game.require_enumerable(self.max_born_evaluations, per_string=game.n, what="parity audit")
        return game

    @staticmethod
    def _check_dits(dits, d: int):
        if d < 2:
            raise InvalidDimensionError(f"d must be >= 2, got {d}")
        if any(not 0 <= int(x) < d for x in dits):
            raise InvalidDimensionError(f"dits {tuple(dits)} out of range for d={d}")

    @staticmethod
    def _check_game(n: int, d: int):
        if n < 1 or d < 2:
            raise InvalidDimensionError(f"need N >= 1 and d >= 2, got N={n}, d={d}")
