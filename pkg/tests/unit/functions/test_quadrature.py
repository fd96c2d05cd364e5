"""Tests for quadrature module."""

import pytest

from qseries_verify.core.config import reset_config
from qseries_verify.core.exceptions import ConfigurationError
from qseries_verify.core.numerics import PrecisionContext
from qseries_verify.functions.quadrature import orthogonality_matrix, orthogonality_tolerance
from tests.fixtures.sample_data import ORTHOGONALITY_TOLERANCE


@pytest.fixture
def quad_ctx():
    """Quadrature context at 128 bits."""
    return PrecisionContext(precision_bits=128)


class TestOrthogonalityTolerance:
    """Tests for orthogonality_tolerance function."""

    def test_square_root_of_working_tolerance(self, quad_ctx):
        """Test that 128 bits give 2^-64."""
        assert orthogonality_tolerance(quad_ctx) == 2.0**-64

    def test_tightens_with_precision(self, quad_ctx):
        """Test that more bits give a smaller threshold, below the 1e-8 acceptance level."""
        wider = PrecisionContext(precision_bits=192)

        assert orthogonality_tolerance(wider) < orthogonality_tolerance(quad_ctx)
        assert orthogonality_tolerance(PrecisionContext(precision_bits=64)) < 1e-8


class TestOrthogonalityMatrix:
    """Tests for orthogonality_matrix function."""

    def test_stieltjes_wigert(self, quad_ctx):
        """Test SW orthogonality at q = 1/2 up to degree 3."""
        result = orthogonality_matrix("sw", 0.5, 3, ctx=quad_ctx)

        assert result.passed
        assert result.max_diagonal_rel_error <= ORTHOGONALITY_TOLERANCE
        assert result.max_offdiagonal_ratio <= ORTHOGONALITY_TOLERANCE
        assert len(result.gram) == 4
        assert result.target_diagonal[0] == pytest.approx(1.0)
        assert result.target_diagonal[1] == pytest.approx(1 / (0.5 * 0.5))

    @pytest.mark.slow
    def test_q_laguerre(self, quad_ctx):
        """Test q-Laguerre orthogonality at q = 1/2, alpha = 1/2 up to degree 3."""
        result = orthogonality_matrix("qlaguerre", 0.5, 3, alpha=0.5, ctx=quad_ctx)

        assert result.passed
        assert result.max_diagonal_rel_error <= ORTHOGONALITY_TOLERANCE
        assert result.max_offdiagonal_ratio <= ORTHOGONALITY_TOLERANCE
        # (q^{3/2};q)_1 / (q (q;q)_1)
        expected = (1 - 0.5**1.5) / (0.5 * 0.5)
        assert result.target_diagonal[1] == pytest.approx(expected)

    def test_degree_zero(self, quad_ctx):
        """Test that degree 0 has no off-diagonal entries."""
        result = orthogonality_matrix("sw", 0.5, 0, ctx=quad_ctx)

        assert result.max_offdiagonal_ratio == 0.0
        assert result.gram[0][0] == pytest.approx(1.0, rel=1e-8)

    def test_unknown_family(self, quad_ctx):
        """Test that an unknown family raises ConfigurationError."""
        with pytest.raises(ConfigurationError):
            orthogonality_matrix("hermite", 0.5, 2, ctx=quad_ctx)

    def test_negative_degree(self, quad_ctx):
        """Test that max_degree < 0 raises ConfigurationError."""
        with pytest.raises(ConfigurationError):
            orthogonality_matrix("sw", 0.5, -1, ctx=quad_ctx)

    def test_missing_alpha(self, quad_ctx):
        """Test that the q-Laguerre family requires alpha."""
        with pytest.raises(ConfigurationError):
            orthogonality_matrix("qlaguerre", 0.5, 2, ctx=quad_ctx)

    def test_result_tolerance_follows_precision(self):
        """Test that the reported tolerance comes from the context precision."""
        ctx = PrecisionContext(precision_bits=160)
        result = orthogonality_matrix("sw", 0.5, 1, ctx=ctx)

        assert result.tolerance == 2.0**-80
        assert result.passed

    def test_entries_by_mpmath_quad(self, mocker, quad_ctx):
        """Test that each upper-triangle entry is one quad call over the panels."""
        spy = mocker.spy(quad_ctx.mp, "quad")

        result = orthogonality_matrix("sw", 0.5, 1, ctx=quad_ctx)

        assert spy.call_count == 3
        panels = spy.call_args.args[1]
        assert len(panels) > 2
        assert panels == sorted(panels)
        assert spy.call_args.kwargs["error"] is True
        assert spy.call_args.kwargs["maxdegree"] == 8
        assert result.gram[0][1] == result.gram[1][0]

    def test_max_level_from_config(self, mocker, monkeypatch, quad_ctx):
        """Test that the configured quadrature level caps the tanh-sinh degree."""
        monkeypatch.setenv("QSV_QUADRATURE_MAX_LEVEL", "7")
        reset_config()
        spy = mocker.spy(quad_ctx.mp, "quad")

        orthogonality_matrix("sw", 0.5, 0, ctx=quad_ctx)

        assert spy.call_args.kwargs["maxdegree"] == 7
