"""Verified q-series numerics and scaled asymptotics."""

__version__ = "1.0.0"
