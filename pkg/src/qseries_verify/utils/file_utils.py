"""File system utilities for report output."""

from pathlib import Path

from ..core.exceptions import OutputError


def ensure_directory_exists(directory: str | Path) -> None:
    """
    Ensure directory exists, create if necessary.

    Args:
        directory: Directory path

    Raises:
        OutputError: If the directory cannot be created
    """
    try:
        Path(directory).mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f"Cannot create directory {directory}: {str(e)}", original_error=e) from e


def check_directory_writable(directory: str | Path) -> bool:
    """
    Check if directory is writable.

    Args:
        directory: Directory path to check

    Returns:
        True if writable, False otherwise
    """
    try:
        test_file = Path(directory) / ".write_test"
        test_file.touch()
        test_file.unlink()
        return True
    except OSError:
        return False


def validate_output_path(path: str | Path) -> Path:
    """
    Make sure a report can be written to ``path``.

    The parent directory is created when missing.

    Args:
        path: Destination file

    Returns:
        The path as a Path

    Raises:
        OutputError: If the path is a directory or its parent is not writable
    """
    target = Path(path)
    if target.is_dir():
        raise OutputError(f"Output path is a directory: {target}")
    parent = target.parent if str(target.parent) else Path(".")
    ensure_directory_exists(parent)
    if not check_directory_writable(parent):
        raise OutputError(f"Directory is not writable: {parent}")
    return target


def write_text(path: str | Path, content: str) -> None:
    """
    Write UTF-8 text to ``path``.

    Raises:
        OutputError: If the file cannot be written
    """
    target = validate_output_path(path)
    try:
        target.write_text(content, encoding="utf-8", newline="")
    except OSError as e:
        raise OutputError(f"Cannot write {target}: {str(e)}", original_error=e) from e
