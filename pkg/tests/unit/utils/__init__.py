"""Utils unit tests package."""

