import argparse

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ..exceptions import PoracError
from ..models.report import RunReport
from ..providers import report_service


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class ReportCommand(BaseCommand):
    """Base for commands that build a RunReport and print it.

    Exit status: 0 when every check passes, 1 when one fails (after the report
    is written), 2 for invalid or infeasible requests.
    """
    default_tolerance_setting = 'PORAC_ANALYTIC_TOL'

    def add_arguments(self, parser):
        output = parser.add_mutually_exclusive_group()
        output.add_argument('--json', action='store_true', help='Print the report as one JSON object')
        output.add_argument('--csv', action='store_true', help='Print the results as CSV rows')
        parser.add_argument('--tol', type=float, default=None,
                            help='Comparison tolerance (default from settings)')
        parser.add_argument('--threads', type=positive_int, default=None,
                            help='Worker cap (default: PORAC_THREADS, the logical core count)')
        self.add_report_arguments(parser)

    def add_report_arguments(self, parser):
        pass

    def build_report(self, options, tol: float, threads: int) -> RunReport:
        raise NotImplementedError

    def default_tolerance(self, options) -> float:
        return getattr(settings, self.default_tolerance_setting)

    def handle(self, *args, **options):
        tol = options['tol'] if options['tol'] is not None else self.default_tolerance(options)
        threads = options['threads'] or settings.PORAC_THREADS
        try:
            report = self.build_report(options, tol, threads)
        except PoracError as exc:
            raise CommandError(str(exc), returncode=2)

        fmt = 'json' if options['json'] else 'csv' if options['csv'] else 'table'
        self.stdout.write(report_service.render(report, fmt))
        if fmt == 'table':
            if report.passed:
                self.stdout.write(self.style.SUCCESS('PASS'))
            else:
                self.stdout.write(self.style.ERROR(f"FAIL: {', '.join(report.failed_checks)}"))
        if not report.passed:
            raise CommandError(f"failed checks: {', '.join(report.failed_checks)}", returncode=1)
