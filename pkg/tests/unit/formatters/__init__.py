"""Formatters unit tests package."""

