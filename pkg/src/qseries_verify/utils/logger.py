"""Logging for the library and the verification harness."""

import logging
import sys
from typing import Literal

PACKAGE_LOGGER = "qseries_verify"

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
# parallel sweeps interleave rows from several workers
THREADED_FORMAT = "%(asctime)s - %(threadName)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO",
    log_format: str | None = None,
    jobs: int = 1,
) -> logging.Logger:
    """
    Configure the package logger.

    Logs go to stderr; stdout carries the CSV or JSON report when no output file
    is given. Calling again replaces the previous handlers, so repeated CLI runs
    in one process keep a single stream.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_format: Custom format; defaults to one with the worker thread when jobs > 1
        jobs: Number of sweep workers

    Returns:
        The package logger
    """
    if log_format is None:
        log_format = THREADED_FORMAT if jobs > 1 else DEFAULT_FORMAT

    logging.basicConfig(
        level=getattr(logging, level),
        format=log_format,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
    logging.captureWarnings(True)

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(getattr(logging, level))
    return logger


def get_logger(name: str | None = None) -> logging.Logger:
    """
    Get the logger of a module, placed under the package logger.

    Args:
        name: Module name, usually __name__

    Returns:
        Logger instance
    """
    if name is None or name == PACKAGE_LOGGER:
        return logging.getLogger(PACKAGE_LOGGER)
    if name.startswith(f"{PACKAGE_LOGGER}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{PACKAGE_LOGGER}.{name}")
