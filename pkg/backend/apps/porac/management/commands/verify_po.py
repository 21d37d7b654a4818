from apps.porac.management.base import ReportCommand
from apps.porac.models.game import ObliviousnessLevel, ParityConvention, PoracGame
from apps.porac.models.report import Provenance, RunReport
from apps.porac.providers import porac_service, strategy_repository


class Command(ReportCommand):
    help = 'Audit a named PORAC strategy for parity obliviousness'

    def add_report_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Number of dits N')
        parser.add_argument('--d', type=int, required=True, help='Alphabet size d')
        parser.add_argument('--strategy', required=True, choices=strategy_repository.names())
        parser.add_argument('--convention', default=ParityConvention.PAPER.value,
                            choices=[c.value for c in ParityConvention],
                            help='Parity set: at most d-2 zeros (paper) or at least two nonzero dits (hamming2)')
        parser.add_argument('--level', default='both',
                            choices=['both'] + [level.value for level in ObliviousnessLevel],
                            help='Audit response distributions, encoded states, or both')

    def build_report(self, options, tol, threads):
        name, level = options['strategy'], options['level']
        game = PoracGame(options['n'], options['d'])
        convention = ParityConvention(options['convention'])
        parameters = {'n': game.n, 'd': game.d, 'strategy': name, 'convention': convention.value, 'level': level}
        report = RunReport('verify_po', parameters, tol)

        strategy = strategy_repository.find_by_name(name, game)
        parity = porac_service.parity_set(game, convention)
        report.add('parity_count', len(parity), Provenance.ANALYTIC)

        audits = []
        if level in ('both', ObliviousnessLevel.MEASUREMENT.value):
            audits.append(porac_service.parity_oblivious_measurement_check(strategy, parity, tol, threads))
        if level in ('both', ObliviousnessLevel.STATE.value):
            audits.append(porac_service.parity_oblivious_state_check(strategy, parity, tol, threads))

        for audit in audits:
            key = audit.level.value
            report.add(f'{key}_max_violation', audit.max_violation, Provenance.SIMULATED)
            report.check(f'{key} oblivious', audit.passed)
            if not audit.passed:
                report.note(f"{key} witness {self._describe(audit)}")
        return report

    @staticmethod
    def _describe(audit) -> str:
        s = ''.join(str(dit) for dit in audit.witness[0])
        if audit.level is ObliviousnessLevel.MEASUREMENT:
            _, y, b, l, l_prime = audit.witness
            return f"(s={s}, y={y}, b={b}, l={l}, l'={l_prime})"
        _, l, l_prime = audit.witness
        return f"(s={s}, l={l}, l'={l_prime})"
