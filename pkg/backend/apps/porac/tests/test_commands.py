import csv
import io
import json
from io import StringIO

from django.apps import apps as django_apps
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from apps.porac.models.report import Provenance, RunReport
from apps.porac.serializers import RunReportSerializer


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--json'))


def results(data):
    return {entry['name']: entry for entry in data['results']}


class BoundsCommandTests(SimpleTestCase):
    def test_qubit_pair(self):
        data = run_json('bounds', '--n', '2', '--d', '2')
        self.assertEqual(list(data), ['command', 'parameters', 'results', 'pass', 'tolerance', 'notes'])
        self.assertEqual(data['command'], 'bounds')
        self.assertTrue(data['pass'])
        found = results(data)
        self.assertEqual(found['noncontextual']['exact'], '3/4')
        self.assertAlmostEqual(found['quantum_upper']['value'], 0.853553390593, places=12)
        self.assertAlmostEqual(found['achieved']['value'], 0.853553390593, places=12)
        self.assertEqual(found['achieved']['provenance'], 'simulated')
        self.assertIsNone(found['quantum_upper']['exact'])

    def test_three_bits(self):
        found = results(run_json('bounds', '--n', '3', '--d', '2'))
        self.assertEqual(found['noncontextual']['exact'], '2/3')
        self.assertAlmostEqual(found['quantum_upper']['value'], 0.788675134595, places=12)
        self.assertNotIn('achieved', found)

    def test_single_dit_is_trivial(self):
        found = results(run_json('bounds', '--n', '1', '--d', '4'))
        self.assertEqual(found['noncontextual']['exact'], '1/1')
        self.assertAlmostEqual(found['quantum_upper']['value'], 1.0, places=12)

    def test_qutrit_pair_notes_gap(self):
        data = run_json('bounds', '--n', '2', '--d', '3')
        self.assertTrue(data['pass'])
        self.assertEqual(len(data['notes']), 1)

    def test_invalid_dimension(self):
        with self.assertRaises(CommandError) as ctx:
            run('bounds', '--n', '2', '--d', '1')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_csv_matches_json(self):
        data = run_json('bounds', '--n', '2', '--d', '5')
        rows = list(csv.reader(io.StringIO(run('bounds', '--n', '2', '--d', '5', '--csv'))))
        self.assertEqual(rows[0], ['name', 'value', 'provenance', 'exact'])
        self.assertEqual(rows[-1][:2], ['pass', 'true'])
        for row, entry in zip(rows[1:-1], data['results']):
            self.assertEqual(row[0], entry['name'])
            self.assertEqual(float(row[1]), entry['value'])
            self.assertEqual(row[2], entry['provenance'])

    def test_table_ends_with_verdict(self):
        output = run('bounds', '--n', '2', '--d', '2')
        self.assertIn('noncontextual', output)
        self.assertTrue(output.rstrip().endswith('PASS'))


class SimulateCommandTests(SimpleTestCase):
    def test_qutrit_pair(self):
        data = run_json('porac_simulate', '--n', '2', '--d', '3')
        found = results(data)
        self.assertTrue(data['pass'])
        self.assertAlmostEqual(found['success']['value'], found['expected']['value'], places=9)

    def test_seven_level_pair(self):
        found = results(run_json('porac_simulate', '--n', '2', '--d', '7'))
        self.assertAlmostEqual(found['success']['value'], 0.688982236505, places=9)

    def test_qubit_three_to_one(self):
        found = results(run_json('porac_simulate', '--n', '3', '--d', '2', '--strategy', 'qubit3to1'))
        self.assertAlmostEqual(found['success']['value'], 0.788675134595, places=9)

    def test_unsupported_strategy(self):
        with self.assertRaises(CommandError) as ctx:
            run('porac_simulate', '--n', '2', '--d', '3', '--strategy', 'qubit3to1')
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):
    def test_naive_strategy_fails_with_witness(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('verify_po', '--n', '2', '--d', '2', '--strategy', 'naive', stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        output = out.getvalue()
        self.assertIn('measurement witness (s=11', output)
        self.assertIn('FAIL', output)

    def test_qubit_three_to_one_passes(self):
        data = run_json('verify_po', '--n', '3', '--d', '2', '--strategy', 'qubit3to1', '--convention', 'hamming2')
        found = results(data)
        self.assertTrue(data['pass'])
        self.assertEqual(found['parity_count']['value'], 4.0)
        self.assertIn('measurement_max_violation', found)
        self.assertIn('state_max_violation', found)

    def test_single_level(self):
        found = results(run_json('verify_po', '--n', '2', '--d', '3', '--strategy', 'paper2d',
                                 '--convention', 'hamming2', '--level', 'measurement'))
        self.assertNotIn('state_max_violation', found)


class OracleCommandTests(SimpleTestCase):
    def test_classical(self):
        data = run_json('oracle', '--task', 'classical', '--n', '3', '--d', '2')
        found = results(data)
        self.assertEqual(found['classical_unconstrained']['exact'], '3/4')
        self.assertEqual(found['noncontextual']['exact'], '2/3')
        self.assertTrue(data['notes'][0].startswith('unconstrained'))

    def test_lemma3(self):
        found = results(run_json('oracle', '--task', 'lemma3', '--n', '2', '--d', '3'))
        self.assertEqual(found['formula']['value'], 6.0)
        self.assertAlmostEqual(found['lemma3_sum']['value'], 6.0, places=9)

    def test_phi(self):
        data = run_json('oracle', '--task', 'phi', '--n', '2', '--d', '2')
        self.assertTrue(data['pass'])
        self.assertEqual(data['notes'], ['saturated'])

    def test_certainty(self):
        data = run_json('oracle', '--task', 'certainty', '--n', '2', '--d', '2', '--samples', '500')
        found = results(data)
        self.assertTrue(data['pass'])
        self.assertEqual(data['parameters']['samples'], 500)
        self.assertAlmostEqual(found['oracle_max']['value'], 0.853553390593, delta=1e-4)

    def test_output_is_independent_of_threads(self):
        args = ('oracle', '--task', 'certainty', '--n', '3', '--d', '3', '--samples', '9000', '--seed', '3',
                '--no-refine')
        self.assertEqual(run(*args, '--json', '--threads', '1'), run(*args, '--json', '--threads', '4'))

    def test_porac_search(self):
        data = run_json('oracle', '--task', 'porac', '--n', '2', '--d', '2', '--samples', '200')
        found = results(data)
        self.assertTrue(data['pass'])
        self.assertAlmostEqual(found['oracle_max']['value'], 0.853553390593, delta=1e-3)
        self.assertEqual(found['noncontextual']['exact'], '3/4')
        self.assertEqual(found['oracle_max']['provenance'], 'oracle')

    def test_refined_runs_are_identical(self):
        args = ('oracle', '--task', 'porac', '--n', '2', '--d', '2', '--samples', '200', '--seed', '11', '--json')
        self.assertEqual(run(*args), run(*args))
        certainty = ('oracle', '--task', 'certainty', '--n', '2', '--d', '3', '--samples', '300', '--json')
        self.assertEqual(run(*certainty), run(*certainty))

    def test_unknown_mub_construction(self):
        with self.assertRaises(CommandError) as ctx:
            run('oracle', '--task', 'lemma3', '--n', '3', '--d', '4')
        self.assertEqual(ctx.exception.returncode, 2)


class ReportSerializerTests(SimpleTestCase):
    def test_values_rounded_to_twelve_digits(self):
        report = RunReport('bounds', {'n': 2, 'd': 2}, 1e-9)
        report.add('x', 2 / 3, Provenance.ANALYTIC)
        data = RunReportSerializer(report).data
        self.assertEqual(data['results'][0]['value'], 0.666666666667)
        self.assertTrue(data['pass'])

    def test_failed_check(self):
        report = RunReport('bounds', {}, 1e-9)
        report.check('always', False)
        self.assertFalse(RunReportSerializer(report).data['pass'])
        self.assertEqual(report.failed_checks, ['always'])


class ProjectSettingsTests(SimpleTestCase):
    def test_no_database_backed_apps(self):
        self.assertNotIn('django.contrib.auth', settings.INSTALLED_APPS)
        self.assertNotIn('django.contrib.contenttypes', settings.INSTALLED_APPS)
        self.assertEqual(list(django_apps.get_app_config('porac').get_models()), [])
