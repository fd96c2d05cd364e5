"""Sweep execution: grid resolution, per-row evaluation, report output."""

import time
from concurrent.futures import Future, ThreadPoolExecutor
from typing import Any

from ..core.exceptions import ConfigurationError, DomainError, RegimeError
from ..core.interfaces import ReportFormatter, SweepTarget
from ..core.numerics import PrecisionContext
from ..formatters.csv_formatter import CsvFormatter
from ..formatters.json_formatter import JsonFormatter
from ..models.sweep import SweepConfig, SweepReport, SweepRow
from ..utils.file_utils import validate_output_path, write_text
from ..utils.logger import get_logger
from .targets import get_target

logger = get_logger(__name__)

_FORMATTERS: dict[str, type[ReportFormatter]] = {
    "csv": CsvFormatter,
    "json": JsonFormatter,
}


def _skip_row(
    index: int, target: SweepTarget, params: dict[str, Any], reason: str
) -> SweepRow:
    return SweepRow(
        index=index, target=target.name, parameters=params, status="skip", reason=reason
    )


def evaluate_point(
    target: SweepTarget,
    index: int,
    params: dict[str, Any],
    cfg: SweepConfig,
) -> SweepRow:
    """
    Evaluate one grid point in its own precision context.

    Points outside a regime gate or the target's domain become skip rows with the
    reason recorded. Resource and configuration errors propagate.

    Args:
        target: Target to evaluate
        index: Position in the grid
        params: Parameters of the point
        cfg: Sweep configuration

    Returns:
        The evaluated row, timed in wall_ms
    """
    ctx = PrecisionContext(
        precision_bits=cfg.precision_bits,
        guard_bits=cfg.guard_bits,
        max_terms=cfg.max_terms,
    )
    started = time.perf_counter()
    try:
        row = target.evaluate(index, params, cfg.options, ctx)
    except RegimeError as e:
        logger.warning(f"row {index} skipped: {e.message}")
        row = _skip_row(index, target, params, f"regime gate: {e.message}")
    except DomainError as e:
        logger.warning(f"row {index} skipped: {e.message}")
        row = _skip_row(index, target, params, f"domain: {e.message}")
    except ConfigurationError as e:
        raise ConfigurationError(f"grid point {index} {params}: {e.message}", e) from e
    elapsed = (time.perf_counter() - started) * 1000.0
    return row.model_copy(update={"wall_ms": elapsed})


def _resolve_grid(target: SweepTarget, cfg: SweepConfig) -> list[dict[str, Any]]:
    grid = cfg.grid or target.default_grid(cfg.options)
    if not grid:
        raise ConfigurationError(f"{target.name}: sweep grid is empty")
    return grid


def _run_sequential(
    target: SweepTarget, grid: list[dict[str, Any]], cfg: SweepConfig
) -> tuple[list[SweepRow], bool]:
    rows: list[SweepRow] = []
    for index, params in enumerate(grid):
        row = evaluate_point(target, index, params, cfg)
        rows.append(row)
        if cfg.fail_fast and row.status == "fail":
            return rows, True
    return rows, False


def _run_parallel(
    target: SweepTarget, grid: list[dict[str, Any]], cfg: SweepConfig
) -> tuple[list[SweepRow], bool]:
    rows: list[SweepRow] = []
    with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        futures: list[Future[SweepRow]] = [
            pool.submit(evaluate_point, target, index, params, cfg)
            for index, params in enumerate(grid)
        ]
        # collected in grid order so the report does not depend on scheduling
        for position, future in enumerate(futures):
            try:
                row = future.result()
            except Exception:
                for pending in futures[position + 1 :]:
                    pending.cancel()
                raise
            rows.append(row)
            if cfg.fail_fast and row.status == "fail":
                for pending in futures[position + 1 :]:
                    pending.cancel()
                return rows, True
    return rows, False


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """
    Run a verification target over its grid and write the report.

    The grid defaults to the target's own grid when the configuration gives none.
    Rows come back in grid order whatever the number of jobs.

    Args:
        cfg: Sweep configuration

    Returns:
        SweepReport with one row per evaluated point

    Raises:
        ConfigurationError: If the target is unknown or the grid is empty
        OutputError: If the output path cannot be written
        ResourceError: If an evaluation exceeds the term cap
    """
    target = get_target(cfg.target)
    if cfg.output_path is not None:
        validate_output_path(cfg.output_path)
    grid = _resolve_grid(target, cfg)

    logger.info(
        f"Running {target.name} over {len(grid)} points "
        f"({cfg.precision_bits} bits, {cfg.jobs} job(s))"
    )
    if cfg.jobs > 1:
        rows, aborted = _run_parallel(target, grid, cfg)
    else:
        rows, aborted = _run_sequential(target, grid, cfg)

    report = SweepReport.from_rows(target.name, rows, aborted=aborted)
    s = report.summary
    logger.info(
        f"{target.name}: {s.passed} passed, {s.failed} failed, {s.skipped} skipped"
        + (" (aborted by fail-fast)" if aborted else "")
    )
    if cfg.output_path is not None:
        write_report(report, cfg)
    return report


def render_report(report: SweepReport, output_format: str, include_timing: bool = False) -> str:
    """
    Render a report in the requested format.

    Raises:
        ConfigurationError: If the format is unknown
    """
    formatter_cls = _FORMATTERS.get(output_format)
    if formatter_cls is None:
        raise ConfigurationError(f"unknown output format: {output_format}")
    return formatter_cls().format_report(report, include_timing)


def write_report(report: SweepReport, cfg: SweepConfig) -> str:
    """
    Render the report and write it to the configured path, if any.

    Returns:
        The rendered text
    """
    text = render_report(report, cfg.output_format, cfg.include_timing)
    if cfg.output_path is not None:
        write_text(cfg.output_path, text)
        logger.info(f"Report written to {cfg.output_path}")
    return text
