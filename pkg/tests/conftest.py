"""Shared test fixtures."""

import pytest

from qseries_verify.core.config import reset_config
from qseries_verify.core.nome import QPoint
from qseries_verify.core.numerics import PrecisionContext, default_context


@pytest.fixture(autouse=True)
def reset_config_fixture():
    """Reset config and the cached default context around each test."""
    reset_config()
    default_context.cache_clear()
    yield
    reset_config()
    default_context.cache_clear()


@pytest.fixture
def ctx():
    """Working context at the default 256 bits."""
    return PrecisionContext(precision_bits=256)


@pytest.fixture
def low_ctx():
    """Cheaper 128-bit context for heavier grids."""
    return PrecisionContext(precision_bits=128)


@pytest.fixture
def oracle_ctx():
    """512-bit context for brute-force reference values."""
    return PrecisionContext(precision_bits=512)


@pytest.fixture
def qp_half(ctx):
    """The nome q = 1/2."""
    return QPoint.from_q(0.5, ctx)


@pytest.fixture
def qp_third(ctx):
    """The nome q = 0.3."""
    return QPoint.from_q(0.3, ctx)
