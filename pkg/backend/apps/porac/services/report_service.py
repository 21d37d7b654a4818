import csv
import io

from rest_framework.renderers import JSONRenderer

from ..exceptions import InvalidDimensionError
from ..models.report import RunReport
from ..serializers.report_serializer import RunReportSerializer, round_significant

FORMATS = ('table', 'json', 'csv')


class ReportService:
    """Render a RunReport as a human table, a single JSON object or CSV rows."""

    def render(self, report: RunReport, fmt: str = 'table') -> str:
        if fmt == 'json':
            return self.to_json(report)
        if fmt == 'csv':
            return self.to_csv(report)
        if fmt == 'table':
            return self.to_table(report)
        raise InvalidDimensionError(f"unknown output format {fmt!r}, choose from {', '.join(FORMATS)}")

    def to_json(self, report: RunReport) -> str:
        data = RunReportSerializer(report).data
        return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')

    def to_csv(self, report: RunReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['name', 'value', 'provenance', 'exact'])
        for entry in RunReportSerializer(report).data['results']:
            writer.writerow([entry['name'], repr(entry['value']), entry['provenance'], entry['exact'] or ''])
        writer.writerow(['pass', 'true' if report.passed else 'false', '', ''])
        return buffer.getvalue().rstrip('\n')

    def to_table(self, report: RunReport) -> str:
        params = ' '.join(f"{key}={value}" for key, value in report.parameters.items())
        lines = [f"{report.command} ({params})"]
        width = max([len(entry.name) for entry in report.results] + [4])
        for entry in report.results:
            value = f"{round_significant(entry.value):.12g}"
            exact = f"  = {entry.exact.numerator}/{entry.exact.denominator}" if entry.exact is not None else ""
            lines.append(f"  {entry.name:<{width}}  {value:>16}  [{entry.provenance.value}]{exact}")
        for text in report.notes:
            lines.append(f"  note: {text}")
        lines.append(f"  tolerance {round_significant(report.tolerance):.3g}")
        return '\n'.join(lines)
