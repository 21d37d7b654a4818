import argparse

from django.conf import settings

from apps.porac.management.base import ReportCommand, positive_int
from apps.porac.models.game import PoracGame
from apps.porac.models.oracle import SearchConfig
from apps.porac.models.report import Provenance, RunReport
from apps.porac.providers import fur_service, oracle_service, porac_service

TASKS = ('certainty', 'porac', 'classical', 'lemma3', 'phi')
SEARCH_TASKS = ('certainty', 'porac')


class Command(ReportCommand):
    help = 'Certify an analytic bound against a brute-force oracle'

    def add_report_arguments(self, parser):
        parser.add_argument('--task', required=True, choices=TASKS)
        parser.add_argument('--n', type=positive_int, default=2, help='Number of dits / outcomes / bases N')
        parser.add_argument('--d', type=int, default=2, help='Dimension d')
        parser.add_argument('--seed', type=int, default=None,
                            help='RNG seed (default: PORAC_SEED, currently %d)' % settings.PORAC_DEFAULT_SEED)
        parser.add_argument('--samples', type=positive_int, default=10_000, help='Random samples per search')
        parser.add_argument('--refine', action=argparse.BooleanOptionalAction, default=True,
                            help='Hill-climb from the best sample')
        parser.add_argument('--outcomes', default='mub', choices=['mub', 'random'],
                            help='certainty: first vectors of N MUBs or N Haar-random vectors')
        parser.add_argument('--bases', default='mub', choices=['mub', 'random'],
                            help='lemma3/phi: N MUBs or N Haar-random bases')

    def default_tolerance(self, options):
        if options['task'] in SEARCH_TASKS:
            return settings.PORAC_ORACLE_TOL
        return settings.PORAC_ANALYTIC_TOL

    def build_report(self, options, tol, threads):
        task, n, d = options['task'], options['n'], options['d']
        seed = options['seed'] if options['seed'] is not None else settings.PORAC_DEFAULT_SEED
        parameters = {'task': task, 'n': n, 'd': d, 'seed': seed}
        if task in SEARCH_TASKS:
            parameters.update(samples=options['samples'], refine=options['refine'])
        if task == 'certainty':
            parameters['outcomes'] = options['outcomes']
        if task in ('lemma3', 'phi'):
            parameters['bases'] = options['bases']
        report = RunReport('oracle', parameters, tol)

        cfg = SearchConfig(samples=options['samples'], seed=seed, refine=options['refine'], tol=tol, threads=threads)
        handler = getattr(self, f'_{task}')
        handler(report, n, d, cfg, options, threads)
        return report

    def _certainty(self, report, n, d, cfg, options, threads):
        outcomes = oracle_service.outcome_set(n, d, options['outcomes'], cfg.seed)
        analytic = fur_service.fur_bound_general(outcomes)
        found = oracle_service.max_certainty_search(outcomes, cfg)

        report.add('oracle_max', found.value, Provenance.ORACLE)
        report.add('exact_maximum', found.exact_maximum, Provenance.ANALYTIC)
        report.add('fur_bound', analytic.bound, Provenance.ANALYTIC)
        report.add('gap', analytic.bound - found.value, Provenance.ORACLE)
        if n == 2:
            tight = fur_service.tight_fur_two(*outcomes.outcomes)
            report.add('tight_two_bound', tight.bound, Provenance.ANALYTIC)
            report.check('oracle_max <= tight_two_bound + tol', found.value <= tight.bound + cfg.tol)
        report.check('oracle_max <= fur_bound + tol', found.value <= analytic.bound + cfg.tol)
        report.check('oracle_max <= exact_maximum + tol', found.value <= found.exact_maximum + cfg.tol)
        if not analytic.maximizer_physical:
            report.note("the Bloch-collinear candidate is not a physical state")

    def _porac(self, report, n, d, cfg, options, threads):
        found = oracle_service.max_porac_search(PoracGame(n, d), cfg)
        report.add('oracle_max', found.value, Provenance.ORACLE)
        report.add('quantum_upper', found.bound, Provenance.ANALYTIC)
        report.add('gap', found.bound - found.value, Provenance.ORACLE)
        report.add('noncontextual', porac_service.noncontextual_bound(n, d), Provenance.ANALYTIC)
        report.check('oracle_max <= quantum_upper + tol', found.value <= found.bound + cfg.tol)

    def _classical(self, report, n, d, cfg, options, threads):
        found = oracle_service.classical_bruteforce_rac(n, d, threads)
        noncontextual = porac_service.noncontextual_bound(n, d)
        report.add('classical_unconstrained', found.best, Provenance.ORACLE)
        report.add('noncontextual', noncontextual, Provenance.ANALYTIC)
        report.check('classical_unconstrained >= noncontextual', found.best >= noncontextual)
        report.note("unconstrained: the enumerated classical strategies are not required to be parity oblivious")

    def _lemma3(self, report, n, d, cfg, options, threads):
        bases = oracle_service.decoding_bases(n, d, options['bases'], cfg.seed)
        result = oracle_service.lemma3_report(bases, report.tolerance)
        report.add('lemma3_sum', result.value, Provenance.ORACLE)
        report.add('formula', result.formula, Provenance.ANALYTIC)
        report.check('|lemma3_sum - formula| <= tol', result.passed)

    def _phi(self, report, n, d, cfg, options, threads):
        bases = oracle_service.decoding_bases(n, d, options['bases'], cfg.seed)
        result = oracle_service.phi_bound_check(bases, report.tolerance)
        report.add('phi', result.phi, Provenance.ORACLE)
        report.add('phi_bound', result.phi_bound, Provenance.ANALYTIC)
        report.add('implied_success', result.implied_success, Provenance.ORACLE)
        report.add('quantum_upper', result.quantum_bound, Provenance.ANALYTIC)
        report.check('phi <= phi_bound + tol and implied_success <= quantum_upper + tol', result.passed)
        report.note("saturated" if result.saturated else "not saturated")
