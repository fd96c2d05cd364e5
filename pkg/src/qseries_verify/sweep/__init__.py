"""Verification sweeps."""
