"""Core configuration, errors and numeric foundations."""
