"""Report writers."""
from .interface import IReportWriter
from .report_writer import ReportWriter

__all__ = ["IReportWriter", "ReportWriter"]
