from .report_writer import REPORT_FILE_EXTENSIONS, ReportWriter, report_file_name

__all__ = ["REPORT_FILE_EXTENSIONS", "ReportWriter", "report_file_name"]
