import logging
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidDimensionError, SizeLimitError
from ..models.bases import Basis
from ..models.bloch import pure_length
from ..models.fur import OutcomeSet
from ..models.game import PoracGame
from ..models.linalg import ComplexMatrix, PureState
from ..models.oracle import (
    CertaintySearchResult,
    ClassicalRacResult,
    Lemma3Report,
    PhiReport,
    PoracSearchResult,
    SearchConfig,
)
from .basis_service import BasisService, is_prime
from .bloch_service import BlochService
from .fur_service import FurService, fur_bound_mub
from .linalg_service import LinalgService
from .parallel import CHUNK_SIZE, chunks, map_ordered, ordered_sum
from .porac_service import PoracService
from .sampling_service import SamplingService, StreamPurpose, orthonormalize

logger = logging.getLogger(__name__)

REFINE_START_STEP = 0.1
REFINE_STOP_STEP = 1e-7
REFINE_MAX_PASSES = 20_000
PORAC_REFINE_CANDIDATES = 16
PORAC_REFINE_STOP_STEP = 1e-6
PORAC_REFINE_MAX_ITERATIONS = 4_000
PORAC_BATCH_ENTRIES = 2_000_000
MAX_SEARCH_STRINGS = 10**3


class OracleService:
    """Brute-force certification of the analytic bounds.

    Every search is a deterministic function of (seed, samples, refine):
    samples are drawn in fixed-size chunks, chunk t from its own Philox
    stream, and the best value is taken in chunk order.
    """

    def __init__(
        self,
        linalg: LinalgService,
        bloch: BlochService,
        bases: BasisService,
        fur: FurService,
        porac: PoracService,
        sampling: SamplingService,
        max_strings: int = 10**6,
        max_born_evaluations: int = 10**7,
        max_classical_evaluations: int = 5 * 10**6,
    ):
        self.linalg = linalg
        self.bloch = bloch
        self.bases = bases
        self.fur = fur
        self.porac = porac
        self.sampling = sampling
        self.max_strings = max_strings
        self.max_born_evaluations = max_born_evaluations
        self.max_classical_evaluations = max_classical_evaluations

    def random_pure_state(self, d: int, rng: np.random.Generator) -> PureState:
        return self.sampling.random_pure_state(d, rng)

    # Inputs

    def outcome_set(self, n: int, d: int, kind: str = 'mub', seed: int = 0) -> OutcomeSet:
        """First outcome of each of N MUBs, or N Haar-random outcome vectors."""
        if kind == 'random':
            rng = self.sampling.stream(seed, purpose=StreamPurpose.INPUT)
            return OutcomeSet.uniform(self.sampling.random_pure_states(d, n, rng))
        return OutcomeSet.uniform([basis[0] for basis in self.decoding_bases(n, d, kind, seed)])

    def decoding_bases(self, n: int, d: int, kind: str = 'mub', seed: int = 0) -> List[Basis]:
        """N mutually unbiased bases when they are known, or N Haar-random bases."""
        if kind == 'random':
            rng = self.sampling.stream(seed, purpose=StreamPurpose.INPUT)
            return [self.sampling.random_basis(d, rng, label=f"haar{i}") for i in range(n)]
        if kind != 'mub':
            raise InvalidDimensionError(f"bases must be 'mub' or 'random', got {kind!r}")
        if n == 1:
            return [self.bases.computational_basis(d)]
        if is_prime(d) and n <= d + 1:
            return list(self.bases.mub_family_prime(d, n))
        if n == 2:
            return list(self.bases.mub_pair(d))
        raise InvalidDimensionError(f"no construction of {n} mutually unbiased bases for d={d}")

    # Certainty search

    def max_certainty_search(self, s: OutcomeSet, cfg: SearchConfig) -> CertaintySearchResult:
        """Largest sum_i w_i |<x_i|psi>|**2 over sampled (and refined) pure states."""
        d = s.dim
        weight = np.einsum('i,ij,ik->jk', np.asarray(s.weights), s.matrix, s.matrix.conj())
        logger.info("certainty search: %d outcomes, d=%d, %d samples, seed %d", s.size, d, cfg.samples, cfg.seed)

        def best_in_chunk(task: Tuple[int, range]) -> Tuple[float, np.ndarray]:
            index, rows = task
            rng = self.sampling.stream(cfg.seed, index)
            psi = self.sampling.gaussian_vectors(rng, len(rows), d)
            values = np.real(np.einsum('ki,ij,kj->k', psi.conj(), weight, psi))
            best = int(np.argmax(values))
            return float(values[best]), psi[best]

        results = map_ordered(best_in_chunk, list(enumerate(chunks(cfg.samples))), cfg.threads)
        value, psi = max(results, key=lambda item: item[0])
        if cfg.refine:
            value, psi = self._pattern_search(weight, psi, value)

        exact = float(self.linalg.hermitian_eigenvalues(self._weight_matrix(weight))[-1])
        logger.info("certainty search: value %.12g, exact maximum %.12g", value, exact)
        return CertaintySearchResult(value=value, state=PureState.from_vector(psi), exact_maximum=exact)

    def _pattern_search(self, weight: np.ndarray, psi: np.ndarray, value: float) -> Tuple[float, np.ndarray]:
        """Coordinate hill-climb on the real and imaginary parts, step halved when no move helps."""
        d = psi.shape[0]
        moves = np.concatenate([np.eye(d), -np.eye(d), 1j * np.eye(d), -1j * np.eye(d)])
        step = REFINE_START_STEP
        for _ in range(REFINE_MAX_PASSES):
            if step < REFINE_STOP_STEP:
                break
            trial = psi[None, :] + step * moves
            trial /= np.linalg.norm(trial, axis=1, keepdims=True)
            values = np.real(np.einsum('ki,ij,kj->k', trial.conj(), weight, trial))
            best = int(np.argmax(values))
            if values[best] > value:
                value, psi = float(values[best]), trial[best]
            else:
                step /= 2
        logger.debug("pattern search stopped at step %.1e, value %.12g", step, value)
        return value, psi

    @staticmethod
    def _weight_matrix(weight: np.ndarray) -> ComplexMatrix:
        return ComplexMatrix((weight + weight.conj().T) / 2, hermitian=True)

    # Classical enumeration

    def classical_bruteforce_rac(self, n: int, d: int, threads: int = 1) -> ClassicalRacResult:
        """Exact optimum over deterministic classical strategies with one d-level message.

        Encodings are enumerated; for each, the best decoding answers the most
        frequent x_y among the strings sharing a message. Not parity constrained.
        """
        game = PoracGame(n, d)
        game.require_enumerable(self.max_strings, what="classical enumeration")
        size = game.size
        encodings = d ** size
        if encodings * size > self.max_classical_evaluations:
            raise SizeLimitError(f"classical enumeration of the {game} game", encodings * size,
                                 self.max_classical_evaluations)
        strings = game.strings()
        dits = np.arange(d)
        answer_onehot = (strings[:, :, None] == dits[None, None, :]).astype(np.int64)  # (S, N, d)
        place = d ** np.arange(size - 1, -1, -1, dtype=np.int64)
        logger.info("classical enumeration of %d encodings for %s", encodings, game)

        def best_in_chunk(rows: range) -> Tuple[int, int]:
            index = np.arange(rows.start, rows.stop, dtype=np.int64)
            messages = (index[:, None] // place[None, :]) % d  # (K, S)
            message_onehot = (messages[:, :, None] == dits[None, None, :]).astype(np.int64)
            # counts[k, y, m, b] = #{x : e_k(x) = m, x_y = b}
            counts = np.einsum('ksm,syb->kymb', message_onehot, answer_onehot)
            score = counts.max(axis=3).sum(axis=(1, 2))
            best = int(np.argmax(score))
            return int(score[best]), int(index[best])

        results = map_ordered(best_in_chunk, chunks(encodings, CHUNK_SIZE), threads)
        score, encoding = max(results, key=lambda item: item[0])

        messages = tuple(int(m) for m in (encoding // place) % d)
        answers = []
        for y in range(n):
            row = []
            for m in range(d):
                tally = np.bincount(strings[np.asarray(messages) == m, y], minlength=d)
                row.append(int(np.argmax(tally)))
            answers.append(tuple(row))
        best = Fraction(score, size * n)
        logger.info("classical optimum for %s: %s", game, best)
        return ClassicalRacResult(best=best, messages=messages, answers=tuple(answers))

    # Bloch-sum identities

    def lemma3_sum(self, bases: Sequence[Basis]) -> float:
        """sum over outcome strings x of |sum_i x_i|**2, x_i the Bloch vector of outcome x_i of basis i."""
        vectors, game = self._outcome_bloch_vectors(bases)
        strings = game.strings()

        def partial(rows: range) -> float:
            total = vectors[np.arange(game.n)[None, :], strings[rows.start:rows.stop]].sum(axis=1)
            return ordered_sum(np.sum(total ** 2, axis=1))

        return ordered_sum(partial(rows) for rows in chunks(game.size))

    def lemma3_report(self, bases: Sequence[Basis], tol: float = 1e-9) -> Lemma3Report:
        n, d = len(bases), bases[0].dim
        formula = (d - 1) / (2 * d) * n * d ** n
        return Lemma3Report(value=self.lemma3_sum(bases), formula=formula, tol=tol)

    def phi_bound_check(self, decodings: Sequence[Basis], tol: float = 1e-9) -> PhiReport:
        """Phi = sum_x sum_i x_i . b_x with b_x of pure length along sum_i x_i."""
        vectors, game = self._outcome_bloch_vectors(decodings)
        n, d = game.n, game.d
        strings = game.strings()

        def partial(rows: range) -> float:
            total = vectors[np.arange(n)[None, :], strings[rows.start:rows.stop]].sum(axis=1)
            return ordered_sum(np.linalg.norm(total, axis=1))

        phi = pure_length(d) * ordered_sum(partial(rows) for rows in chunks(game.size))
        phi_bound = math.sqrt(n) * (d - 1) * d ** n / (2 * d)
        implied = 1 / d + 2 * phi / (n * d ** n)
        quantum = fur_bound_mub(n, d)
        report = PhiReport(
            phi=phi,
            phi_bound=phi_bound,
            implied_success=implied,
            quantum_bound=quantum,
            tol=tol,
            saturated=abs(implied - quantum) <= tol,
        )
        if d >= 3 and not report.saturated:
            logger.warning("Phi for %d bases in d=%d implies %.12g, below the bound %.12g", n, d, implied, quantum)
        return report

    def _outcome_bloch_vectors(self, bases: Sequence[Basis]) -> Tuple[np.ndarray, PoracGame]:
        if not bases:
            raise InvalidDimensionError("at least one basis is required")
        d = bases[0].dim
        if any(b.dim != d for b in bases):
            raise DimensionMismatchError("bases have different dimensions")
        game = PoracGame(len(bases), d)
        game.require_enumerable(self.max_strings, what="outcome-string enumeration")
        game.require_enumerable(self.max_born_evaluations, per_string=game.n, what="outcome-string enumeration")
        vectors = np.array([[self.bloch.state_bloch(x).components for x in basis.vectors] for basis in bases])
        return vectors, game

    # PORAC search

    def max_porac_search(self, game: PoracGame, cfg: SearchConfig) -> PoracSearchResult:
        """Best success over Haar-random projective decodings with optimal pure encodings.

        For fixed decoding bases the best encoding of x is the top eigenvector
        of (1/N) sum_y |b_(y, x_y)><b_(y, x_y)|, so a decoding scores the mean
        top eigenvalue over x.
        """
        game.require_enumerable(MAX_SEARCH_STRINGS, what="PORAC search")
        n, d = game.n, game.d
        strings = game.strings()
        batch = max(1, PORAC_BATCH_ENTRIES // (game.size * n * d * d))
        bound = fur_bound_mub(n, d)
        logger.info("PORAC search on %s: %d samples, seed %d", game, cfg.samples, cfg.seed)

        def best_in_chunk(task: Tuple[int, range]) -> Tuple[float, np.ndarray]:
            index, rows = task
            rng = self.sampling.stream(cfg.seed, index)
            decodings = self.sampling.random_basis_rows(rng, (len(rows), n), d)
            values = self._porac_values(decodings, strings)
            best = int(np.argmax(values))
            return float(values[best]), decodings[best]

        results = map_ordered(best_in_chunk, list(enumerate(chunks(cfg.samples, batch))), cfg.threads)
        value, decodings = max(results, key=lambda item: item[0])
        if cfg.refine:
            value, decodings = self._perturbation_search(decodings, value, strings, cfg.seed)

        found = tuple(
            self.bases.basis_from_matrix(rows, label=f"decode{y}") for y, rows in enumerate(decodings)
        )
        gap = bound - value
        if d >= 3 and gap > cfg.tol:
            logger.warning("PORAC search on %s: best %.12g is %.3e below the bound %.12g", game, value, gap, bound)
        logger.info("PORAC search on %s: best %.12g, bound %.12g", game, value, bound)
        return PoracSearchResult(value=value, bases=found, bound=bound)

    @staticmethod
    def _porac_values(decodings: np.ndarray, strings: np.ndarray) -> np.ndarray:
        """Mean top eigenvalue per decoding; decodings has shape (K, N, d, d)."""
        n = decodings.shape[1]
        chosen = decodings[:, np.arange(n)[None, :], strings]  # (K, S, N, d)
        operator = np.einsum('ksyi,ksyj->ksij', chosen, chosen.conj()) / n
        top = np.linalg.eigvalsh(operator)[..., -1]
        return top.mean(axis=1)

    def _perturbation_search(self, decodings, value, strings, seed) -> Tuple[float, np.ndarray]:
        """Random local moves re-orthonormalized onto bases, step halved after a failed round."""
        rng = self.sampling.stream(seed, purpose=StreamPurpose.REFINE)
        n, d = decodings.shape[0], decodings.shape[1]
        step = REFINE_START_STEP
        for _ in range(PORAC_REFINE_MAX_ITERATIONS):
            if step < PORAC_REFINE_STOP_STEP:
                break
            noise = rng.standard_normal((PORAC_REFINE_CANDIDATES, n, d, d)) + 1j * rng.standard_normal(
                (PORAC_REFINE_CANDIDATES, n, d, d)
            )
            candidates = orthonormalize(decodings[None] + step * noise)
            values = self._porac_values(candidates, strings)
            best = int(np.argmax(values))
            if values[best] > value:
                value, decodings = float(values[best]), candidates[best]
            else:
                step /= 2
        logger.debug("perturbation search stopped at step %.1e, value %.12g", step, value)
        return value, decodings
