"""Jacobi theta functions and the Dedekind eta function."""
