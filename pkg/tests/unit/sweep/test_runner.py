"""Tests for sweep runner module."""

import json

import pytest

from qseries_verify.core.exceptions import (
    ConfigurationError,
    DomainError,
    OutputError,
    RegimeError,
    ResourceError,
)
from qseries_verify.models.sweep import SweepConfig, SweepReport
from qseries_verify.sweep.runner import evaluate_point, render_report, run_sweep
from tests.fixtures.mocks import create_mock_target


@pytest.fixture
def patch_target(mocker):
    """Patch the target lookup with a mock target built from the given options."""

    def _patch(**kwargs):
        target = create_mock_target(**kwargs)
        mocker.patch("qseries_verify.sweep.runner.get_target", return_value=target)
        return target

    return _patch


def config(**kwargs):
    return SweepConfig(target="remainders", **kwargs)


def stable_rows(report: SweepReport) -> list[dict]:
    return [r.model_dump(exclude={"wall_ms"}) for r in report.rows]


class TestEvaluatePoint:
    """Tests for evaluate_point function."""

    def test_pass_row_is_timed(self):
        """Test that the row carries a non-negative wall time."""
        target = create_mock_target()
        row = evaluate_point(target, 0, {"n": 0}, config())

        assert row.status == "pass"
        assert row.wall_ms >= 0

    def test_regime_error_becomes_skip(self):
        """Test that a regime gate failure is a skip row with its reason."""
        target = create_mock_target(raising={1: RegimeError("n = 1 is below the gate", 2.0)})
        row = evaluate_point(target, 1, {"n": 1}, config())

        assert row.status == "skip"
        assert row.reason == "regime gate: n = 1 is below the gate"
        assert row.parameters == {"n": 1}

    def test_domain_error_becomes_skip(self):
        """Test that a domain error is a skip row."""
        target = create_mock_target(raising={0: DomainError("z must be nonzero")})
        row = evaluate_point(target, 0, {"n": 0}, config())

        assert row.status == "skip"
        assert row.reason.startswith("domain:")

    def test_configuration_error_names_grid_point(self):
        """Test that a configuration error is re-raised with the grid point."""
        target = create_mock_target(raising={3: ConfigurationError("missing 'q'")})

        with pytest.raises(ConfigurationError, match="grid point 3"):
            evaluate_point(target, 3, {"n": 3}, config())

    def test_resource_error_propagates(self):
        """Test that exceeding the term cap is not swallowed."""
        target = create_mock_target(raising={0: ResourceError("too many terms", 10**6)})

        with pytest.raises(ResourceError):
            evaluate_point(target, 0, {"n": 0}, config())

    def test_context_follows_config(self):
        """Test that each point gets a context at the configured precision."""
        target = create_mock_target()
        evaluate_point(target, 0, {"n": 0}, config(precision_bits=128, max_terms=2048))

        ctx = target.evaluate.call_args.args[3]
        assert ctx.precision_bits == 128
        assert ctx.max_terms == 2048


class TestRunSweep:
    """Tests for run_sweep function."""

    def test_default_grid(self, patch_target):
        """Test that the target's grid is used when none is configured."""
        target = patch_target()
        report = run_sweep(config())

        target.default_grid.assert_called_once_with({})
        assert [r.index for r in report.rows] == list(range(6))
        assert report.summary.passed == 6

    def test_explicit_grid(self, patch_target):
        """Test that a configured grid replaces the default one."""
        target = patch_target()
        report = run_sweep(config(grid=[{"n": 7}, {"n": 8}]))

        target.default_grid.assert_not_called()
        assert [r.parameters for r in report.rows] == [{"n": 7}, {"n": 8}]

    def test_empty_grid(self, patch_target):
        """Test that an empty grid raises ConfigurationError."""
        patch_target(grid=[])

        with pytest.raises(ConfigurationError, match="empty"):
            run_sweep(config())

    def test_failures_counted(self, patch_target):
        """Test that failing rows are counted without stopping the sweep."""
        patch_target(failing={1, 4})
        report = run_sweep(config())

        assert report.summary.failed == 2
        assert report.summary.total == 6
        assert not report.aborted

    def test_skips_counted(self, patch_target):
        """Test that regime skips are counted separately."""
        patch_target(raising={0: RegimeError("below gate")})
        report = run_sweep(config())

        assert report.summary.skipped == 1
        assert report.rows[0].status == "skip"

    @pytest.mark.parametrize("jobs", [1, 3])
    def test_fail_fast(self, patch_target, jobs):
        """Test that fail-fast stops at the first failing row."""
        patch_target(failing={2, 4})
        report = run_sweep(config(fail_fast=True, jobs=jobs))

        assert report.aborted
        assert [r.index for r in report.rows] == [0, 1, 2]
        assert report.summary.failed == 1

    def test_parallel_matches_sequential(self, patch_target):
        """Test that the report does not depend on the number of jobs."""
        patch_target(failing={3})
        sequential = run_sweep(config(jobs=1))
        parallel = run_sweep(config(jobs=4))

        assert stable_rows(parallel) == stable_rows(sequential)
        assert parallel.summary == sequential.summary

    def test_parallel_error_propagates(self, patch_target):
        """Test that a worker error reaches the caller."""
        patch_target(raising={2: ResourceError("too many terms")})

        with pytest.raises(ResourceError):
            run_sweep(config(jobs=2))

    def test_writes_output(self, patch_target, tmp_path):
        """Test that the report is written in the configured format."""
        patch_target()
        path = tmp_path / "reports" / "sweep.json"
        report = run_sweep(config(output_path=str(path), output_format="json"))

        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["summary"]["total"] == report.summary.total

    def test_bad_output_path_checked_first(self, patch_target, tmp_path):
        """Test that an unwritable output path fails before any evaluation."""
        target = patch_target()

        with pytest.raises(OutputError):
            run_sweep(config(output_path=str(tmp_path)))

        target.evaluate.assert_not_called()

    def test_real_target_lookup(self):
        """Test a short sweep of the remainder target end to end."""
        report = run_sweep(
            SweepConfig(
                target="remainders",
                grid=[{"a": "2+1j", "q": 0.5, "n": 8}, {"a": "-3", "q": 0.3, "n": 6}],
            )
        )

        assert report.summary.passed == 2


class TestRenderReport:
    """Tests for render_report function."""

    def test_csv(self):
        """Test that csv output starts with the header row."""
        report = SweepReport.from_rows("theta", [])
        assert render_report(report, "csv").startswith("index,target")

    def test_unknown_format(self):
        """Test that an unknown format raises ConfigurationError."""
        with pytest.raises(ConfigurationError):
            render_report(SweepReport.from_rows("theta", []), "xml")
