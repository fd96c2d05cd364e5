"""Tests for file_utils module."""

from unittest.mock import patch

import pytest

from qseries_verify.core.exceptions import OutputError
from qseries_verify.utils.file_utils import (
    check_directory_writable,
    ensure_directory_exists,
    validate_output_path,
    write_text,
)


class TestEnsureDirectoryExists:
    """Tests for ensure_directory_exists function."""

    def test_creates_nested_directory(self, tmp_path):
        """Test that missing parents are created."""
        target = tmp_path / "a" / "b"
        ensure_directory_exists(target)

        assert target.is_dir()

    def test_existing_directory(self, tmp_path):
        """Test that an existing directory is left alone."""
        ensure_directory_exists(tmp_path)
        assert tmp_path.is_dir()

    def test_failure_raises_output_error(self, tmp_path):
        """Test that an OSError becomes OutputError."""
        with patch("pathlib.Path.mkdir", side_effect=PermissionError("denied")):
            with pytest.raises(OutputError) as exc_info:
                ensure_directory_exists(tmp_path / "x")

        assert isinstance(exc_info.value.original_error, PermissionError)


class TestCheckDirectoryWritable:
    """Tests for check_directory_writable function."""

    def test_writable(self, tmp_path):
        """Test that a temporary directory is writable."""
        assert check_directory_writable(tmp_path) is True

    def test_missing_directory(self, tmp_path):
        """Test that a missing directory is not writable."""
        assert check_directory_writable(tmp_path / "missing") is False


class TestValidateOutputPath:
    """Tests for validate_output_path function."""

    def test_creates_parent(self, tmp_path):
        """Test that the parent directory is created."""
        path = validate_output_path(tmp_path / "reports" / "out.csv")

        assert path.parent.is_dir()
        assert path.name == "out.csv"

    def test_directory_rejected(self, tmp_path):
        """Test that a directory path raises OutputError."""
        with pytest.raises(OutputError, match="directory"):
            validate_output_path(tmp_path)

    def test_unwritable_parent(self, tmp_path):
        """Test that an unwritable parent raises OutputError."""
        with patch(
            "qseries_verify.utils.file_utils.check_directory_writable", return_value=False
        ):
            with pytest.raises(OutputError, match="not writable"):
                validate_output_path(tmp_path / "out.csv")


class TestWriteText:
    """Tests for write_text function."""

    def test_round_trip(self, tmp_path):
        """Test that UTF-8 text is written unchanged."""
        path = tmp_path / "report.csv"
        write_text(path, "index,reason\n0,θ gate\n")

        assert path.read_bytes() == "index,reason\n0,θ gate\n".encode("utf-8")

    def test_write_failure(self, tmp_path):
        """Test that a failed write raises OutputError."""
        with patch("pathlib.Path.write_text", side_effect=OSError("disk full")):
            with pytest.raises(OutputError, match="Cannot write"):
                write_text(tmp_path / "report.csv", "x")
