import math
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase
from numpy.testing import assert_allclose

from apps.porac.exceptions import InvalidDimensionError, SizeLimitError, UnsupportedStrategyError
from apps.porac.models.game import ParityConvention, PoracGame
from apps.porac.models.linalg import PureState
from apps.porac.providers import (
    basis_service,
    bloch_service,
    linalg_service,
    porac_service,
    strategy_repository,
)
from apps.porac.services.porac_service import PoracService
from apps.porac.strategies import QuantumStrategy


def optimal_2d(d: int) -> float:
    return (1 + 1 / math.sqrt(d)) / 2


class EncodingTests(SimpleTestCase):
    def test_encode_examples(self):
        rho = linalg_service.projector(porac_service.encode_2d(0, 0, 2))
        self.assertAlmostEqual(linalg_service.born_probability(rho, PureState.basis_state(2, 0)), optimal_2d(2), places=12)
        rho = linalg_service.projector(porac_service.encode_2d(1, 0, 2))
        self.assertAlmostEqual(linalg_service.born_probability(rho, PureState.basis_state(2, 1)), optimal_2d(2), places=12)
        rho = linalg_service.projector(porac_service.encode_2d(2, 1, 3))
        e1 = basis_service.fourier_basis(3)[1]
        self.assertAlmostEqual(linalg_service.born_probability(rho, e1), optimal_2d(3), places=12)

    def test_dit_out_of_range(self):
        with self.assertRaises(InvalidDimensionError):
            porac_service.encode_2d(3, 0, 3)
        with self.assertRaises(InvalidDimensionError):
            porac_service.decode_prob_closed_form(0, 0, 2, 'first', 2)

    def test_unknown_question(self):
        with self.assertRaises(InvalidDimensionError):
            porac_service.decode_prob_closed_form(0, 0, 0, 'third', 2)

    def test_closed_form_example(self):
        self.assertAlmostEqual(porac_service.decode_prob_closed_form(0, 1, 1, 'first', 2),
                               0.5 / (2 + math.sqrt(2)), places=12)
        self.assertAlmostEqual(porac_service.decode_prob_closed_form(0, 1, 1, 'first', 2), 0.146447, places=6)

    def test_closed_form_matches_simulation(self):
        for d in range(2, 6):
            strategy = porac_service.paper_2d_strategy(d)
            table = strategy.response_probabilities()
            for index, (x0, x1) in enumerate(strategy.game.strings()):
                first = [porac_service.decode_prob_closed_form(int(x0), int(x1), p, 'first', d) for p in range(d)]
                second = [porac_service.decode_prob_closed_form(int(x0), int(x1), p, 'second', d) for p in range(d)]
                assert_allclose(table[index, 0], first, atol=1e-12)
                assert_allclose(table[index, 1], second, atol=1e-12)
                self.assertAlmostEqual(sum(first), 1, places=12)
                self.assertAlmostEqual(sum(second), 1, places=12)

    def test_encoded_00_is_maximally_certain(self):
        for d in range(2, 8):
            psi = porac_service.encode_2d(0, 0, d)
            e0 = basis_service.fourier_basis(d)[0]
            overlap = abs(linalg_service.inner(psi, e0)) ** 2
            self.assertAlmostEqual(overlap, optimal_2d(d), places=12)


class SuccessProbabilityTests(SimpleTestCase):
    def test_two_dit_strategy_sweep(self):
        for d in range(2, 8):
            success = porac_service.success_probability(porac_service.paper_2d_strategy(d))
            self.assertAlmostEqual(success, optimal_2d(d), places=12)
            self.assertGreater(success, porac_service.noncontextual_bound(2, d))
            upper = porac_service.quantum_upper_bound(2, d)
            self.assertLessEqual(success, upper + 1e-12)
            if d == 2:
                self.assertAlmostEqual(success, upper, places=12)
            else:
                self.assertLess(success, upper - 1e-6)

    def test_two_dit_values(self):
        self.assertAlmostEqual(porac_service.success_probability(porac_service.paper_2d_strategy(2)), 0.8535534, places=7)
        self.assertAlmostEqual(porac_service.success_probability(porac_service.paper_2d_strategy(3)), 0.788675, places=6)
        self.assertAlmostEqual(porac_service.success_probability(porac_service.paper_2d_strategy(4)), 0.75, places=12)
        self.assertAlmostEqual(porac_service.success_probability(porac_service.paper_2d_strategy(5)), 0.723607, places=6)

    def test_qubit_three_to_one(self):
        strategy = porac_service.qubit_3to1_strategy()
        success = porac_service.success_probability(strategy)
        self.assertAlmostEqual(success, optimal_2d(3), places=12)
        self.assertAlmostEqual(success, porac_service.quantum_upper_bound(3, 2), places=12)
        self.assertGreater(success, Fraction(2, 3))

    def test_qubit_three_to_one_bloch_signs(self):
        strategy = porac_service.qubit_3to1_strategy()
        r = 2 * bloch_service.state_bloch(strategy.encode((0, 1, 1))).components
        assert_allclose(r, np.array([1, -1, -1]) / math.sqrt(3), atol=1e-12)

    def test_qubit_two_to_one(self):
        strategy = porac_service.qubit_2to1_strategy()
        self.assertAlmostEqual(porac_service.success_probability(strategy), optimal_2d(2), places=12)
        for x0, x1 in strategy.game.strings():
            r = 2 * bloch_service.state_bloch(strategy.encode((int(x0), int(x1)))).components
            assert_allclose(r, np.array([0, (-1) ** x0, (-1) ** x1]) / math.sqrt(2), atol=1e-12)

    def test_fixed_state_guesses_at_random(self):
        game = PoracGame(2, 3)
        state = basis_service.fourier_basis(3)[0]
        strategy = QuantumStrategy(game, [state] * game.size, [basis_service.computational_basis(3)] * 2)
        self.assertAlmostEqual(porac_service.success_probability(strategy), 1 / 3, places=12)

    def test_naive_strategy(self):
        for d in (2, 3):
            self.assertAlmostEqual(porac_service.success_probability(porac_service.naive_strategy(2, d)), 1 / d, places=12)

    def test_thread_count_does_not_change_result(self):
        strategy = porac_service.paper_2d_strategy(7)
        self.assertEqual(porac_service.success_probability(strategy, threads=1),
                         porac_service.success_probability(strategy, threads=4))

    def test_size_limit(self):
        service = PoracService(linalg_service, bloch_service, basis_service, max_strings=10)
        with self.assertRaisesMessage(SizeLimitError, "limit is 10"):
            service.success_probability(porac_service.naive_strategy(4, 2))

    def test_born_evaluation_limit(self):
        service = PoracService(linalg_service, bloch_service, basis_service, max_born_evaluations=15)
        with self.assertRaises(SizeLimitError):
            service.success_probability(porac_service.naive_strategy(4, 2))


class BoundTests(SimpleTestCase):
    def test_noncontextual_values(self):
        self.assertEqual(porac_service.noncontextual_bound(2, 2), Fraction(3, 4))
        self.assertEqual(porac_service.noncontextual_bound(3, 2), Fraction(2, 3))
        self.assertEqual(porac_service.noncontextual_bound(2, 3), Fraction(2, 3))
        self.assertEqual(porac_service.noncontextual_bound(1, 4), 1)

    def test_quantum_values(self):
        self.assertAlmostEqual(porac_service.quantum_upper_bound(2, 2), 0.8535534, places=7)
        self.assertAlmostEqual(porac_service.quantum_upper_bound(3, 2), 0.7886751, places=7)
        self.assertAlmostEqual(porac_service.quantum_upper_bound(2, 3), 0.804738, places=6)

    def test_quantum_dominates_noncontextual(self):
        for n in range(2, 11):
            for d in range(2, 11):
                self.assertGreater(porac_service.quantum_upper_bound(n, d), porac_service.noncontextual_bound(n, d))

    def test_invalid_game(self):
        with self.assertRaises(InvalidDimensionError):
            porac_service.noncontextual_bound(0, 2)
        with self.assertRaises(InvalidDimensionError):
            PoracGame(2, 1)


class ClassicalStrategyTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(porac_service.classical_po_strategy(2, 2)[1], Fraction(3, 4))
        self.assertEqual(porac_service.classical_po_strategy(3, 2)[1], Fraction(2, 3))
        self.assertEqual(porac_service.classical_po_strategy(2, 5)[1], Fraction(3, 5))

    def test_achieves_noncontextual_bound(self):
        for n in range(1, 5):
            for d in range(2, 6):
                strategy, value = porac_service.classical_po_strategy(n, d)
                self.assertEqual(value, porac_service.noncontextual_bound(n, d))
                self.assertAlmostEqual(porac_service.success_probability(strategy), float(value), places=12)


class ParitySetTests(SimpleTestCase):
    def elements(self, n, d, convention):
        return {''.join(map(str, s)) for s in porac_service.parity_set(PoracGame(n, d), convention)}

    def test_examples(self):
        self.assertEqual(self.elements(2, 2, ParityConvention.PAPER), {'11'})
        self.assertEqual(self.elements(2, 2, ParityConvention.HAMMING2), {'11'})
        self.assertEqual(self.elements(3, 2, ParityConvention.HAMMING2), {'011', '101', '110', '111'})
        self.assertEqual(self.elements(3, 2, ParityConvention.PAPER), {'111'})

    def test_paper_convention_keeps_single_dits_for_larger_alphabets(self):
        elements = self.elements(2, 3, ParityConvention.PAPER)
        self.assertIn('10', elements)
        self.assertNotIn('00', elements)
        self.assertEqual(len(elements), 8)

    def test_accepts_convention_names(self):
        self.assertEqual(len(porac_service.parity_set(PoracGame(2, 3), 'hamming2')), 4)


class StrategyRepositoryTests(SimpleTestCase):
    def test_names(self):
        self.assertEqual(set(strategy_repository.names()), {'paper2d', 'qubit3to1', 'qubit2to1', 'naive', 'classical'})

    def test_unknown_name(self):
        with self.assertRaises(UnsupportedStrategyError):
            strategy_repository.find_by_name('magic', PoracGame(2, 2))

    def test_inapplicable_game(self):
        with self.assertRaises(UnsupportedStrategyError):
            strategy_repository.find_by_name('qubit3to1', PoracGame(2, 2))
        with self.assertRaises(UnsupportedStrategyError):
            strategy_repository.find_by_name('paper2d', PoracGame(3, 3))

    def test_expected_success_matches_simulation(self):
        cases = [('paper2d', 2, 5), ('qubit3to1', 3, 2), ('qubit2to1', 2, 2), ('naive', 3, 3), ('classical', 3, 3)]
        for name, n, d in cases:
            game = PoracGame(n, d)
            simulated = porac_service.success_probability(strategy_repository.find_by_name(name, game))
            self.assertAlmostEqual(simulated, strategy_repository.expected_success(name, game), places=12, msg=name)
