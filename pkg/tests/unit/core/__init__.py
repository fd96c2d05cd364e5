"""Core unit tests package."""

