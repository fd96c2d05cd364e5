"""Pydantic models for parameters, results and sweep reports."""
