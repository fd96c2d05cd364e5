"""JSON report formatter."""

import json

from ..core.interfaces import ReportFormatter
from ..models.sweep import SweepReport


class JsonFormatter(ReportFormatter):
    """Format sweep reports as JSON with the summary and the worst row up front."""

    def format_report(self, report: SweepReport, include_timing: bool = False) -> str:
        """
        Format a report as JSON.

        Args:
            report: Finished sweep report
            include_timing: Keep wall_ms on every row

        Returns:
            JSON string representation
        """
        exclude = None if include_timing else {"wall_ms"}
        rows = [r.model_dump(mode="json", exclude=exclude) for r in report.rows]
        worst = (
            report.worst_case.model_dump(mode="json", exclude=exclude)
            if report.worst_case is not None
            else None
        )
        data = {
            "target": report.target,
            "summary": report.summary.model_dump(),
            "aborted": report.aborted,
            "worst_case": worst,
            "rows": rows,
        }
        return json.dumps(data, indent=2, ensure_ascii=False)
