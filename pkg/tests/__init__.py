"""Tests for qseries-verify."""
