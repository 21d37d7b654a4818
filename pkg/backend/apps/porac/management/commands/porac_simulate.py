from apps.porac.management.base import ReportCommand
from apps.porac.models.game import PoracGame
from apps.porac.models.report import Provenance, RunReport
from apps.porac.providers import porac_service, strategy_repository


class Command(ReportCommand):
    help = 'Simulate a named PORAC strategy by exhaustive enumeration and compare with its closed form'

    def add_report_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Number of dits N')
        parser.add_argument('--d', type=int, required=True, help='Alphabet size d')
        parser.add_argument('--strategy', default='paper2d', choices=strategy_repository.names(),
                            help='Strategy to simulate (default: paper2d)')

    def build_report(self, options, tol, threads):
        name = options['strategy']
        game = PoracGame(options['n'], options['d'])
        report = RunReport('porac_simulate', {'n': game.n, 'd': game.d, 'strategy': name}, tol)

        strategy = strategy_repository.find_by_name(name, game)
        success = porac_service.success_probability(strategy, threads)
        expected = strategy_repository.expected_success(name, game)
        noncontextual = porac_service.noncontextual_bound(game.n, game.d)

        report.add('success', success, Provenance.SIMULATED)
        report.add('expected', expected, Provenance.ANALYTIC)
        report.add('noncontextual', noncontextual, Provenance.ANALYTIC)
        report.add('quantum_upper', porac_service.quantum_upper_bound(game.n, game.d), Provenance.ANALYTIC)
        report.check('|success - expected| <= tol', abs(success - expected) <= tol)
        report.check('success > noncontextual', success > noncontextual)
        return report
