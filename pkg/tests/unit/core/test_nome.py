"""Tests for nome module."""

import pytest

from qseries_verify.core.exceptions import DomainError
from qseries_verify.core.nome import ModularPoint, QPoint
from qseries_verify.core.numerics import PrecisionContext


class TestQPoint:
    """Tests for QPoint."""

    def test_from_q(self, ctx):
        """Test log and tau of a nome."""
        mp = ctx.mp
        qp = QPoint.from_q(0.5, ctx)

        assert qp.q == mp.mpf(0.5)
        assert mp.almosteq(qp.log_q, -mp.log(2))
        assert mp.almosteq(mp.expjpi(qp.tau), qp.q)

    @pytest.mark.parametrize("q", [0, 1, -0.5, 1.5])
    def test_from_q_out_of_range(self, ctx, q):
        """Test that q outside (0, 1) raises DomainError."""
        with pytest.raises(DomainError):
            QPoint.from_q(q, ctx)

    def test_from_log_q(self, ctx):
        """Test building a nome extremely close to one."""
        mp = ctx.mp
        qp = QPoint.from_log_q(mp.mpf("-1e-6"), ctx)

        assert qp.q < 1
        assert mp.almosteq(qp.log_q, mp.mpf("-1e-6"))

    def test_from_log_q_rejects_non_negative(self, ctx):
        """Test that ln q >= 0 raises DomainError."""
        with pytest.raises(DomainError):
            QPoint.from_log_q(0, ctx)

    def test_from_tau(self, ctx):
        """Test that tau = i gives q = e^{-pi}."""
        mp = ctx.mp
        qp = QPoint.from_tau(1j, ctx)

        assert mp.almosteq(qp.q, mp.exp(-mp.pi))

    def test_from_tau_rejects_off_axis(self, ctx):
        """Test that tau must lie on the positive imaginary axis."""
        with pytest.raises(DomainError):
            QPoint.from_tau(0.5 + 1j, ctx)

    def test_power(self, qp_half):
        """Test integer and fractional powers."""
        mp = qp_half.ctx.mp

        assert qp_half.power(3) == mp.mpf(0.125)
        assert mp.almosteq(qp_half.power(0.5), mp.sqrt(0.5))

    def test_squared_and_with_context(self, qp_half):
        """Test derived points."""
        mp = qp_half.ctx.mp

        assert mp.almosteq(qp_half.squared().q, 0.25)
        assert qp_half.with_context(PrecisionContext(precision_bits=64)).ctx.precision_bits == 64


class TestModularPoint:
    """Tests for ModularPoint."""

    def test_create(self, ctx):
        """Test that values are stored as mpmath complex numbers."""
        p = ModularPoint.create(0.25, 1j, ctx)

        assert p.v == ctx.mp.mpc(0.25)
        assert p.tau == ctx.mp.mpc(0, 1)

    @pytest.mark.parametrize("tau", [1 + 0j, -1j, 0.5 - 0.001j])
    def test_create_rejects_lower_half_plane(self, ctx, tau):
        """Test that Im(tau) <= 0 raises DomainError."""
        with pytest.raises(DomainError):
            ModularPoint.create(0, tau, ctx)

    def test_from_nome(self, qp_half):
        """Test building a point from a real nome."""
        p = ModularPoint.from_nome(0.1, qp_half)

        assert p.tau == qp_half.tau
