import csv
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from types import TracebackType
from typing import IO, Literal, Optional, Sequence

from pydantic import BaseModel

from cocentralizer_spectra.cli.domain.report_records import ReportRecord

OutputFormat = Literal["json", "csv", "text"]

REPORT_FILE_EXTENSIONS = {"json": "json", "csv": "csv", "text": "txt"}


def report_file_name(config_hash: str, output_format: OutputFormat, now: Optional[datetime] = None) -> str:
    """<UTC timestamp>-<config hash>.<ext>"""
    stamp = (now or datetime.now(timezone.utc)).strftime("%Y%m%dT%H%M%S%fZ")
    return f"{stamp}-{config_hash}.{REPORT_FILE_EXTENSIONS[output_format]}"


class ReportWriter:
    """
    The single sink for one run's records. JSON is written as one array, CSV with a fixed header and
    text as one line per record. Records are streamed as they arrive.

    Destination: the explicit output path, else a new file in the report directory (never overwritten),
    else stdout.
    """

    LOG_MSG_WRITING = "Writing %s report to %s"
    LOG_MSG_WRITTEN = "Wrote %d records to %s"

    def __init__(
        self,
        output_format: OutputFormat,
        columns: Sequence[str],
        config_hash: str,
        output: Optional[Path] = None,
        report_dir: Optional[Path] = None,
        stream: Optional[IO[str]] = None,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._format = output_format
        self._columns = tuple(columns)
        self._config_hash = config_hash
        self._output = output
        self._report_dir = report_dir
        self._stream_override = stream
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)
        self._handle: Optional[IO[str]] = None
        self._owns_handle = False
        self._csv_writer: Optional[csv.DictWriter] = None
        self._count = 0
        self.path: Optional[Path] = None

    def __enter__(self) -> "ReportWriter":
        self._handle = self._open()
        if self._format == "json":
            self._handle.write("[")
        elif self._format == "csv":
            self._csv_writer = csv.DictWriter(self._handle, fieldnames=self._columns, lineterminator="\n")
            self._csv_writer.writeheader()
        return self

    def __exit__(
        self,
        exc_type: Optional[type[BaseException]],
        exc: Optional[BaseException],
        traceback: Optional[TracebackType],
    ) -> None:
        assert self._handle is not None
        if self._format == "json":
            self._handle.write("\n]\n" if self._count else "]\n")
        self._handle.flush()
        if self._owns_handle:
            self._handle.close()
        self._logger.info(self.LOG_MSG_WRITTEN, self._count, self.path or "stdout")

    @property
    def count(self) -> int:
        return self._count

    def write(self, record: BaseModel) -> None:
        assert self._handle is not None, "ReportWriter must be used as a context manager"
        if self._format == "json":
            self._handle.write(("," if self._count else "") + "\n  " + record.model_dump_json())
        elif self._format == "csv":
            assert self._csv_writer is not None and isinstance(record, ReportRecord)
            self._csv_writer.writerow(record.csv_row())
        else:
            assert isinstance(record, ReportRecord)
            self._handle.write(record.text_line() + "\n")
        self._count += 1

    def _open(self) -> IO[str]:
        if self._stream_override is not None:
            return self._stream_override
        if self._output is not None:
            self.path = self._output
            mode = "w"
        elif self._report_dir is not None:
            self._report_dir.mkdir(parents=True, exist_ok=True)
            self.path = self._report_dir / report_file_name(self._config_hash, self._format)
            mode = "x"
        else:
            return sys.stdout
        self._logger.info(self.LOG_MSG_WRITING, self._format, self.path)
        self._owns_handle = True
        return self.path.open(mode, encoding="utf-8", newline="")
