"""Configuration management using Pydantic Settings."""

import importlib.metadata
from functools import lru_cache
from typing import Any, Literal, TypedDict

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class _PackageMetadata(TypedDict):
    """Type definition for package metadata."""

    name: str
    version: str


@lru_cache(maxsize=1)
def get_package_metadata() -> _PackageMetadata:
    """
    Retrieve package metadata from the installed distribution.

    Falls back to default values if the package is not installed (e.g., when the
    tests run straight from a source checkout).
    """
    try:
        dist = importlib.metadata.distribution("qseries-verify")
        return {
            "name": dist.metadata["Name"],
            "version": dist.version,
        }
    except importlib.metadata.PackageNotFoundError:
        return {"name": "qseries-verify-dev", "version": "1.0.0"}


_pkg_meta = get_package_metadata()


class Config(BaseSettings):
    """
    Application configuration with environment variable support.
    All settings can be overridden via environment variables with QSV_ prefix.
    """

    tool_name: str = _pkg_meta["name"]
    tool_version: str = _pkg_meta["version"]

    # Numeric context
    precision_bits: int = 256
    guard_bits: int = 32
    max_terms: int = 100_000
    oracle_precision_bits: int = 512

    # Quadrature
    quadrature_precision_bits: int = 128
    quadrature_max_level: int = 8

    # Verification policy
    oscillation_floor: float = 0.1
    envelope_factor: float = 10.0
    default_jobs: int = 1

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    # None picks the default format, with the thread name when jobs > 1
    log_format: str | None = None

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="QSV_",
        case_sensitive=False,
    )

    @field_validator("precision_bits", "oracle_precision_bits", "quadrature_precision_bits")
    @classmethod
    def check_precision(cls, v: int) -> int:
        """Reject mantissa widths below 64 bits."""
        if v < 64:
            raise ValueError(f"precision must be at least 64 bits, got {v}")
        return v

    @field_validator("guard_bits")
    @classmethod
    def check_guard_bits(cls, v: int) -> int:
        """Reject guard widths below 16 bits."""
        if v < 16:
            raise ValueError(f"guard_bits must be at least 16, got {v}")
        return v

    @field_validator("max_terms")
    @classmethod
    def check_max_terms(cls, v: int) -> int:
        """Reject term caps below 1024."""
        if v < 1024:
            raise ValueError(f"max_terms must be at least 1024, got {v}")
        return v

    @field_validator("quadrature_max_level", "default_jobs")
    @classmethod
    def check_positive(cls, v: int) -> int:
        """Require a positive integer."""
        if v < 1:
            raise ValueError(f"value must be positive, got {v}")
        return v

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by key."""
        return getattr(self, key, default)

    def get_int(self, key: str, default: int = 0) -> int:
        """Get integer configuration value."""
        value = getattr(self, key, default)
        return int(value) if value is not None else default

    def get_str(self, key: str, default: str = "") -> str:
        """Get string configuration value."""
        value = getattr(self, key, default)
        return str(value) if value is not None else default


# Singleton instance
_config: Config | None = None


def get_config() -> Config:
    """
    Get or create configuration instance.

    Returns:
        Config instance
    """
    global _config
    if _config is None:
        _config = Config()
    return _config


def reset_config() -> None:
    """Reset configuration instance (useful for testing)."""
    global _config
    _config = None
