"""CSV report formatter."""

import csv
import io
from pathlib import Path
from typing import Any

from ..core.interfaces import ReportFormatter
from ..models.sweep import SweepReport
from ..utils.file_utils import write_text

# 20 significant digits
FLOAT_FORMAT = ".19e"


def format_value(value: Any) -> str:
    """Serialize one cell: floats in scientific notation, booleans lower-case."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    if isinstance(value, complex):
        return f"{format(value.real, FLOAT_FORMAT)}{format(value.imag, '+' + FLOAT_FORMAT)}j"
    return str(value)


def _ordered_keys(dicts: list[dict[str, Any]]) -> list[str]:
    keys: list[str] = []
    for d in dicts:
        for key in d:
            if key not in keys:
                keys.append(key)
    return keys


class CsvFormatter(ReportFormatter):
    """Format sweep reports as CSV, one row per grid point in grid order."""

    def header(self, report: SweepReport, include_timing: bool = False) -> list[str]:
        """
        Column names of the report.

        Args:
            report: Sweep report
            include_timing: Whether the wall_ms column is present

        Returns:
            Column names in output order
        """
        params = _ordered_keys([r.parameters for r in report.rows])
        values = [k for k in _ordered_keys([r.values for r in report.rows]) if k not in params]
        columns = ["index", "target", *params, *values]
        columns += ["measured", "bound", "ratio", "status", "reason"]
        if include_timing:
            columns.append("wall_ms")
        return columns

    def format_report(self, report: SweepReport, include_timing: bool = False) -> str:
        """
        Format a report as CSV text.

        Args:
            report: Finished sweep report
            include_timing: Add the wall_ms column (output is then not reproducible)

        Returns:
            CSV text with a header row first
        """
        columns = self.header(report, include_timing)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in report.rows:
            cells = {
                "index": row.index,
                "target": row.target,
                **row.parameters,
                **row.values,
                "measured": row.measured,
                "bound": row.bound,
                "ratio": row.ratio,
                "status": row.status,
                "reason": row.reason,
                "wall_ms": row.wall_ms,
            }
            writer.writerow([format_value(cells.get(c)) for c in columns])
        return buffer.getvalue()


def emit_csv(
    report: SweepReport, path: str | Path | None = None, include_timing: bool = False
) -> str:
    """
    Render a report as CSV and write it to ``path`` when given.

    Args:
        report: Finished sweep report
        path: Destination file; None only returns the text
        include_timing: Add the wall_ms column

    Returns:
        The CSV text

    Raises:
        OutputError: If the file cannot be written
    """
    text = CsvFormatter().format_report(report, include_timing)
    if path is not None:
        write_text(path, text)
    return text
