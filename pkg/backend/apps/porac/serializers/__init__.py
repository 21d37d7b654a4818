from .report_serializer import ResultSerializer, RunReportSerializer, round_significant

__all__ = ['ResultSerializer', 'RunReportSerializer', 'round_significant']
