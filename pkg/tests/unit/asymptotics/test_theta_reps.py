"""Tests for theta_reps module."""

import math

import pytest

from qseries_verify.asymptotics.theta_reps import (
    aq_theta_rep,
    bessel_theta_rep,
    laguerre_theta_rep,
    sw_theta_rep,
    theta_rep,
)
from qseries_verify.core.exceptions import DomainError, RegimeError
from qseries_verify.core.nome import QPoint

FAMILIES = ["aq", "bessel", "sw", "laguerre"]
GATE_DIVISORS = {"aq": 2, "bessel": 2, "sw": 4, "laguerre": 4}
ARGUMENTS = [2, 1 + 1j, 0.5]
PARAMETER = 0.5


def first_index(q: float, divisor: int) -> int:
    """Smallest n with 2 q^(n/divisor) / (1 - q) < 1."""
    n = 1
    while not 2 * q ** (n / divisor) / (1 - q) < 1:
        n += 1
    return n


def param_for(family: str) -> float | None:
    return PARAMETER if family in ("bessel", "laguerre") else None


class TestGate:
    """Tests for the large-n regime gate."""

    def test_below_gate_raises_regime_error(self, qp_half):
        """Test that n below the gate raises RegimeError with the measured value."""
        with pytest.raises(RegimeError) as exc_info:
            aq_theta_rep(2, qp_half, 2)

        assert exc_info.value.gate_value == pytest.approx(2.0)

    def test_first_index_passes(self, qp_half):
        """Test that the first index past the gate is accepted."""
        result = aq_theta_rep(2, qp_half, first_index(0.5, 2))
        assert result.satisfied

    def test_quarter_gate_for_polynomials(self, qp_half):
        """Test that the polynomial families use the stricter q^(n/4) gate."""
        n = first_index(0.5, 2)
        assert n < first_index(0.5, 4)

        with pytest.raises(RegimeError):
            sw_theta_rep(2, qp_half, n)

    def test_non_positive_n_is_domain_error(self, qp_half):
        """Test that n = 0 raises DomainError rather than a gate failure."""
        with pytest.raises(DomainError) as exc_info:
            aq_theta_rep(2, qp_half, 0)

        assert not isinstance(exc_info.value, RegimeError)


class TestDomain:
    """Tests for argument validation."""

    @pytest.mark.parametrize("family", FAMILIES)
    def test_zero_argument_rejected(self, qp_half, family):
        """Test that z = 0 raises DomainError for every family."""
        with pytest.raises(DomainError):
            theta_rep(family, 0, qp_half, 20, param_for(family))

    def test_bessel_order_at_minus_one_rejected(self, qp_half):
        """Test that nu <= -1 raises DomainError."""
        with pytest.raises(DomainError):
            bessel_theta_rep(2, -1.0, qp_half, 20)

    def test_laguerre_parameter_at_minus_one_rejected(self, qp_half):
        """Test that alpha <= -1 raises DomainError."""
        with pytest.raises(DomainError):
            laguerre_theta_rep(2, -1.5, qp_half, 20)

    def test_missing_order_parameter(self, qp_half):
        """Test that the Bessel family needs nu."""
        with pytest.raises(DomainError, match="order parameter"):
            theta_rep("bessel", 2, qp_half, 20)

    def test_unknown_family(self, qp_half):
        """Test that an unknown family raises DomainError."""
        with pytest.raises(DomainError, match="unknown"):
            theta_rep("hermite", 2, qp_half, 20)  # type: ignore[arg-type]


class TestRepresentations:
    """Tests for the certified remainders of each family."""

    @pytest.mark.parametrize("family", FAMILIES)
    @pytest.mark.parametrize("z", ARGUMENTS)
    def test_remainder_within_bound_past_gate(self, low_ctx, family, z):
        """Test the remainder bound at the first few indices past the gate."""
        qp = QPoint.from_q(0.5, low_ctx)
        start = first_index(0.5, GATE_DIVISORS[family])

        for n in range(start, start + 4):
            result = theta_rep(family, z, qp, n, param_for(family), low_ctx)
            assert result.satisfied, f"{family} z={z} n={n} ratio={result.ratio}"
            assert result.ratio <= 1.0

    @pytest.mark.parametrize("family", FAMILIES)
    def test_reconstruction_is_exact(self, low_ctx, family):
        """Test that prefactor * (theta_4 + e(n)) rebuilds the direct value."""
        qp = QPoint.from_q(0.3, low_ctx)
        n = first_index(0.3, GATE_DIVISORS[family]) + 2

        result = theta_rep(family, 1 + 1j, qp, n, param_for(family), low_ctx)

        assert result.reconstruction_rel_dev < 2.0**-100

    def test_remainder_decays_with_n(self, ctx, qp_half):
        """Test that the A_q remainder shrinks as n grows."""
        start = first_index(0.5, 2)
        residuals = [abs(aq_theta_rep(2, qp_half, n, ctx).residual) for n in (start, start + 10)]

        assert residuals[1] < residuals[0]

    def test_dispatch_matches_direct_call(self, ctx, qp_half):
        """Test that theta_rep forwards nu to the Bessel representation."""
        direct = bessel_theta_rep(1 + 1j, PARAMETER, qp_half, 12, ctx)
        dispatched = theta_rep("bessel", 1 + 1j, qp_half, 12, PARAMETER, ctx)

        assert dispatched.residual == direct.residual
        assert dispatched.extra_param == PARAMETER
        assert dispatched.family == "bessel"

    def test_result_fields(self, ctx, qp_half):
        """Test that the result records its inputs."""
        result = sw_theta_rep(0.5, qp_half, 12, ctx)

        assert result.family == "sw"
        assert result.q == 0.5
        assert result.z == 0.5
        assert result.n == 12
        assert result.extra_param is None
        assert result.bound > 0
        assert math.isfinite(result.lhs.log_mag)

    @pytest.mark.slow
    @pytest.mark.parametrize("family", FAMILIES)
    @pytest.mark.parametrize("q", [0.3, 0.5])
    @pytest.mark.parametrize("z", ARGUMENTS)
    def test_full_grid(self, family, q, z, ctx):
        """Test the bound from the gate through sixteen further indices."""
        qp = QPoint.from_q(q, ctx)
        start = first_index(q, GATE_DIVISORS[family])

        for n in range(start, start + 17):
            result = theta_rep(family, z, qp, n, param_for(family), ctx)
            assert result.satisfied, f"{family} q={q} z={z} n={n} ratio={result.ratio}"
