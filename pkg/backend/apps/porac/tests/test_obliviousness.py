import numpy as np
from django.test import SimpleTestCase
from numpy.testing import assert_allclose

from apps.porac.exceptions import UnsupportedStrategyError
from apps.porac.models.game import ObliviousnessLevel, ParityConvention, PoracGame
from apps.porac.providers import porac_service

PAPER, HAMMING2 = ParityConvention.PAPER, ParityConvention.HAMMING2
TOL = 1e-10


def audit(strategy, convention, level):
    parity = porac_service.parity_set(strategy.game, convention)
    if level is ObliviousnessLevel.MEASUREMENT:
        return porac_service.parity_oblivious_measurement_check(strategy, parity, TOL)
    return porac_service.parity_oblivious_state_check(strategy, parity, TOL)


class TwoDitStrategyTests(SimpleTestCase):
    def test_measurement_level_hamming2_prime_dimensions(self):
        for d in (2, 3, 5, 7):
            report = audit(porac_service.paper_2d_strategy(d), HAMMING2, ObliviousnessLevel.MEASUREMENT)
            self.assertTrue(report.passed, (d, report.max_violation, report.witness))
            self.assertGreater(report.comparisons, 0)

    def test_measurement_level_composite_dimensions_leak(self):
        for d in (4, 6):
            report = audit(porac_service.paper_2d_strategy(d), HAMMING2, ObliviousnessLevel.MEASUREMENT)
            self.assertFalse(report.passed, d)

    def test_qubit_passes_both_levels_and_conventions(self):
        strategy = porac_service.paper_2d_strategy(2)
        for convention in (PAPER, HAMMING2):
            for level in ObliviousnessLevel:
                self.assertTrue(audit(strategy, convention, level).passed, (convention, level))

    def test_paper_convention_single_dit_parities_leak(self):
        report = audit(porac_service.paper_2d_strategy(3), PAPER, ObliviousnessLevel.MEASUREMENT)
        self.assertFalse(report.passed)
        self.assertEqual(sum(1 for dit in report.witness[0] if dit), 1)

    def test_qutrit_state_averages_differ_by_clock_conjugation(self):
        report = audit(porac_service.paper_2d_strategy(3), HAMMING2, ObliviousnessLevel.STATE)
        self.assertFalse(report.passed)

    def test_qubit_class_averages_are_maximally_mixed(self):
        strategy = porac_service.paper_2d_strategy(2)
        rho = strategy.encoded_density_matrices()
        assert_allclose((rho[0] + rho[3]) / 2, np.eye(2) / 2, atol=1e-12)
        assert_allclose((rho[1] + rho[2]) / 2, np.eye(2) / 2, atol=1e-12)


class QubitStrategyTests(SimpleTestCase):
    def test_three_to_one_hamming2(self):
        strategy = porac_service.qubit_3to1_strategy()
        for level in ObliviousnessLevel:
            report = audit(strategy, HAMMING2, level)
            self.assertTrue(report.passed, level)

    def test_two_to_one_class_averages(self):
        strategy = porac_service.qubit_2to1_strategy()
        rho = strategy.encoded_density_matrices()
        assert_allclose((rho[0] + rho[3]) / 2, np.eye(2) / 2, atol=1e-12)
        assert_allclose((rho[1] + rho[2]) / 2, np.eye(2) / 2, atol=1e-12)
        self.assertTrue(audit(strategy, PAPER, ObliviousnessLevel.STATE).passed)


class LeakingStrategyTests(SimpleTestCase):
    def test_naive_fails_both_levels(self):
        strategy = porac_service.naive_strategy(2, 2)
        measurement = audit(strategy, PAPER, ObliviousnessLevel.MEASUREMENT)
        self.assertFalse(measurement.passed)
        self.assertAlmostEqual(measurement.max_violation, 1.0, places=12)
        s, y, b, l, l_prime = measurement.witness
        self.assertEqual(s, (1, 1))
        self.assertNotEqual(l, l_prime)

        state = audit(strategy, PAPER, ObliviousnessLevel.STATE)
        self.assertFalse(state.passed)
        self.assertGreaterEqual(state.max_violation, 0.5)
        self.assertEqual(state.witness[0], (1, 1))

    def test_naive_fails_for_qutrits(self):
        strategy = porac_service.naive_strategy(3, 3)
        self.assertFalse(audit(strategy, HAMMING2, ObliviousnessLevel.MEASUREMENT).passed)


class ClassicalStrategyTests(SimpleTestCase):
    def test_oblivious_under_hamming2_for_prime_dimensions(self):
        for n, d in ((2, 2), (2, 3), (3, 2), (3, 3), (2, 5)):
            strategy, _ = porac_service.classical_po_strategy(n, d)
            for level in ObliviousnessLevel:
                self.assertTrue(audit(strategy, HAMMING2, level).passed, (n, d, level))

    def test_single_dit_parities_are_leaked(self):
        strategy, _ = porac_service.classical_po_strategy(2, 3)
        self.assertFalse(audit(strategy, PAPER, ObliviousnessLevel.STATE).passed)


class AuditMechanicsTests(SimpleTestCase):
    def test_composite_dimension_with_empty_classes(self):
        strategy = porac_service.paper_2d_strategy(4)
        parity = porac_service.parity_set(strategy.game, HAMMING2)
        report = porac_service.parity_oblivious_state_check(strategy, parity, TOL)
        self.assertTrue(0 <= report.max_violation <= 1)

    def test_thread_count_does_not_change_report(self):
        strategy = porac_service.paper_2d_strategy(5)
        parity = porac_service.parity_set(strategy.game, PAPER)
        one = porac_service.parity_oblivious_measurement_check(strategy, parity, TOL, threads=1)
        many = porac_service.parity_oblivious_measurement_check(strategy, parity, TOL, threads=4)
        self.assertEqual((one.max_violation, one.witness, one.comparisons),
                         (many.max_violation, many.witness, many.comparisons))

    def test_parity_set_must_match_game(self):
        strategy = porac_service.paper_2d_strategy(3)
        parity = porac_service.parity_set(PoracGame(2, 2), HAMMING2)
        with self.assertRaises(UnsupportedStrategyError):
            porac_service.parity_oblivious_state_check(strategy, parity, TOL)
