"""Tests for logger module."""

import logging

from qseries_verify.utils.logger import get_logger, setup_logging


class TestGetLogger:
    """Tests for get_logger function."""

    def test_get_logger_returns_logger(self):
        """Test that get_logger returns a logger instance."""
        assert isinstance(get_logger(__name__), logging.Logger)

    def test_get_logger_with_module_name(self):
        """Test that foreign names are placed under the package logger."""
        assert get_logger("test.module.name").name == "qseries_verify.test.module.name"

    def test_package_module_name_kept(self):
        """Test that package module names are not prefixed twice."""
        assert get_logger("qseries_verify.sweep.runner").name == "qseries_verify.sweep.runner"

    def test_default_is_package_logger(self):
        """Test that no name gives the package logger."""
        assert get_logger().name == "qseries_verify"

    def test_get_logger_returns_same_logger(self):
        """Test that same logger is returned for same name."""
        assert get_logger("test.logger") is get_logger("test.logger")


class TestSetupLogging:
    """Tests for setup_logging function."""

    def test_setup_logging_with_info_level(self):
        """Test setup_logging with INFO level."""
        setup_logging(level="INFO")

        assert get_logger("test.setup").getEffectiveLevel() <= logging.INFO

    def test_setup_logging_with_error_level(self):
        """Test that setup_logging returns the package logger at the given level."""
        logger = setup_logging(level="ERROR")

        assert logger.name == "qseries_verify"
        assert logger.level == logging.ERROR

    def test_threaded_format_for_parallel_sweeps(self):
        """Test that the default format names the worker thread when jobs > 1."""
        setup_logging(level="INFO", jobs=4)

        formatter = logging.getLogger().handlers[0].formatter
        assert formatter is not None
        assert "threadName" in formatter._fmt

    def test_repeated_setup_keeps_one_handler(self):
        """Test that calling setup_logging again replaces the root handler."""
        setup_logging(level="INFO")
        setup_logging(level="DEBUG")

        assert len(logging.getLogger().handlers) == 1
