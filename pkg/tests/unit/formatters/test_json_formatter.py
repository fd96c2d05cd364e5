"""Tests for JSON formatter module."""

import json

import pytest

from qseries_verify.formatters.json_formatter import JsonFormatter
from qseries_verify.models.sweep import SweepReport, SweepRow


@pytest.fixture
def formatter():
    """Create JsonFormatter instance."""
    return JsonFormatter()


@pytest.fixture
def sample_report():
    """Create a two-row report with one failure."""
    rows = [
        SweepRow(
            index=0,
            target="remainders",
            parameters={"a": "0.1", "q": 0.5, "n": 4},
            values={"r1_abs": 0.01},
            measured=0.01,
            bound=0.1,
            status="pass",
            wall_ms=3.5,
        ),
        SweepRow(
            index=1,
            target="remainders",
            parameters={"a": "0.1", "q": 0.5, "n": 5},
            values={"r1_abs": 0.2},
            measured=0.2,
            bound=0.1,
            status="fail",
            wall_ms=4.0,
        ),
    ]
    return SweepReport.from_rows("remainders", rows)


class TestJsonFormatter:
    """Tests for JsonFormatter class."""

    def test_format_report_is_valid_json(self, formatter, sample_report):
        """Test that the output parses as JSON."""
        data = json.loads(formatter.format_report(sample_report))

        assert data["target"] == "remainders"
        assert data["aborted"] is False
        assert len(data["rows"]) == 2

    def test_summary_and_worst_case(self, formatter, sample_report):
        """Test that the summary and worst row come first."""
        data = json.loads(formatter.format_report(sample_report))

        assert data["summary"] == {"total": 2, "passed": 1, "failed": 1, "skipped": 0}
        assert data["worst_case"]["index"] == 1
        assert list(data)[:2] == ["target", "summary"]

    def test_rows_in_grid_order(self, formatter, sample_report):
        """Test that rows keep their order and parameters."""
        data = json.loads(formatter.format_report(sample_report))

        assert [r["index"] for r in data["rows"]] == [0, 1]
        assert data["rows"][1]["parameters"] == {"a": "0.1", "q": 0.5, "n": 5}
        assert data["rows"][1]["status"] == "fail"

    def test_timing_excluded_by_default(self, formatter, sample_report):
        """Test that wall_ms is dropped unless timing is requested."""
        data = json.loads(formatter.format_report(sample_report))
        assert "wall_ms" not in data["rows"][0]
        assert "wall_ms" not in data["worst_case"]

    def test_timing_included(self, formatter, sample_report):
        """Test that wall_ms is kept with include_timing."""
        data = json.loads(formatter.format_report(sample_report, include_timing=True))
        assert data["rows"][0]["wall_ms"] == 3.5

    def test_empty_report(self, formatter):
        """Test formatting a report without rows."""
        data = json.loads(formatter.format_report(SweepReport.from_rows("theta", [])))

        assert data["rows"] == []
        assert data["worst_case"] is None
