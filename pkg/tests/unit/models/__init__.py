"""Models unit tests package."""

