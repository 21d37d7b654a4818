from apps.porac.management.base import ReportCommand
from apps.porac.models.game import PoracGame
from apps.porac.models.report import Provenance, RunReport
from apps.porac.providers import porac_service


class Command(ReportCommand):
    help = 'Noncontextual, MUB fine-grained and quantum bounds of the N->1 d-level PORAC game'

    def add_report_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Number of dits N')
        parser.add_argument('--d', type=int, required=True, help='Alphabet size d')

    def build_report(self, options, tol, threads):
        n, d = options['n'], options['d']
        game = PoracGame(n, d)
        report = RunReport('bounds', {'n': n, 'd': d}, tol)

        noncontextual = porac_service.noncontextual_bound(n, d)
        quantum = porac_service.quantum_upper_bound(n, d)
        report.add('noncontextual', noncontextual, Provenance.ANALYTIC)
        report.add('mub_fur_bound', quantum, Provenance.ANALYTIC)
        report.add('quantum_upper', quantum, Provenance.ANALYTIC)
        report.check('quantum_upper >= noncontextual', quantum >= noncontextual - tol)

        if game.n == 2:
            achieved = porac_service.success_probability(porac_service.paper_2d_strategy(d), threads)
            report.add('achieved', achieved, Provenance.SIMULATED)
            report.check('achieved <= quantum_upper', achieved <= quantum + tol)
            report.check('achieved > noncontextual', achieved > noncontextual)
            if achieved < quantum - tol:
                report.note(f"2->1 strategy is {quantum - achieved:.3e} below the quantum bound at d={d}")
        return report
