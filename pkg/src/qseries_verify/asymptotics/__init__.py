"""Theta representations and scaled asymptotic formulas."""
