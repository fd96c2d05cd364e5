"""Tests for polynomials module."""

import pytest

from qseries_verify.core.exceptions import DomainError, UnsupportedParameterError
from qseries_verify.core.nome import QPoint
from qseries_verify.core.numerics import logc_to_complex
from qseries_verify.functions.polynomials import (
    log_weight_qlaguerre,
    log_weight_sw,
    orthonormal_qlaguerre,
    orthonormal_sw,
    q_laguerre,
    stieltjes_wigert,
    weight_qlaguerre,
    weight_sw,
)
from qseries_verify.models.params import PolynomialSpec
from tests.fixtures.sample_data import DUAL_PATH_TOLERANCE


def _rel(a, b):
    return abs(a - b) / abs(b)


def _brute_sw(x, n, q, mp):
    return mp.fsum(
        q ** (k * k) * (-x) ** k / (mp.qp(q, q, k) * mp.qp(q, q, n - k)) for k in range(n + 1)
    )


def _brute_laguerre(x, n, alpha, q, mp):
    qa = q ** (alpha + 1)
    return mp.fsum(
        mp.qp(qa, q, n)
        * q ** (k * k + alpha * k)
        * (-x) ** k
        / (mp.qp(q, q, k) * mp.qp(q, q, n - k) * mp.qp(qa, q, k))
        for k in range(n + 1)
    )


class TestStieltjesWigert:
    """Tests for stieltjes_wigert function."""

    @pytest.mark.parametrize("x", [0.5, 3, -2, 1 + 1j, 250])
    @pytest.mark.parametrize("n", [0, 1, 4, 9])
    def test_matches_direct_sum(self, ctx, oracle_ctx, x, n):
        """Test against naive summation at 512 bits."""
        qp = QPoint.from_q(0.5, ctx)
        mp = oracle_ctx.mp

        value = logc_to_complex(stieltjes_wigert(x, n, qp, ctx), ctx)
        reference = _brute_sw(mp.mpmathify(x), n, mp.mpf(0.5), mp)

        assert _rel(value, reference) <= 2.0**-200

    def test_value_at_zero(self, qp_half):
        """Test S_n(0) = 1/(q;q)_n."""
        mp = qp_half.ctx.mp

        value = logc_to_complex(stieltjes_wigert(0, 3, qp_half), qp_half.ctx)

        assert mp.almosteq(value, 1 / (mp.mpf(0.5) * 0.75 * 0.875))

    def test_negative_degree(self, qp_half):
        """Test that n < 0 raises DomainError."""
        with pytest.raises(DomainError):
            stieltjes_wigert(1, -1, qp_half)


class TestQLaguerre:
    """Tests for q_laguerre function."""

    @pytest.mark.parametrize("x", [0.5, 3, -2, 40])
    @pytest.mark.parametrize("n", [0, 2, 5])
    @pytest.mark.parametrize("alpha", [0.5, -0.5, 1.25])
    def test_matches_direct_sum(self, ctx, oracle_ctx, x, n, alpha):
        """Test against naive summation at 512 bits."""
        qp = QPoint.from_q(0.5, ctx)
        mp = oracle_ctx.mp

        value = logc_to_complex(q_laguerre(x, PolynomialSpec(n=n, alpha=alpha), qp, ctx), ctx)
        reference = _brute_laguerre(mp.mpmathify(x), n, mp.mpf(alpha), mp.mpf(0.5), mp)

        assert _rel(value, reference) <= 2.0**-200

    def test_value_at_zero(self, qp_half):
        """Test L_3(0) = (q^{3/2};q)_3 / (q;q)_3 at alpha = 1/2."""
        mp = qp_half.ctx.mp
        q = mp.mpf(0.5)

        value = logc_to_complex(q_laguerre(0, PolynomialSpec(n=3, alpha=0.5), qp_half), qp_half.ctx)

        assert mp.almosteq(value, mp.qp(q**1.5, q, 3) / mp.qp(q, q, 3))

    def test_missing_alpha(self, qp_half):
        """Test that a spec without alpha raises DomainError."""
        with pytest.raises(DomainError):
            q_laguerre(1, PolynomialSpec(n=2), qp_half)

    def test_alpha_at_minus_one_rejected(self):
        """Test that the spec rejects alpha <= -1."""
        with pytest.raises(DomainError):
            PolynomialSpec(n=2, alpha=-1)


class TestWeights:
    """Tests for the orthogonality weights."""

    def test_sw_weight_formula(self, qp_half):
        """Test the log-normal weight against its closed form."""
        mp = qp_half.ctx.mp
        x = mp.mpf(2)
        log_q = mp.log(mp.mpf(0.5))

        shifted = mp.log(x / mp.sqrt(0.5))
        expected = mp.sqrt(-1 / (2 * mp.pi * log_q)) * mp.exp(shifted**2 / (2 * log_q))

        assert mp.almosteq(mp.exp(log_weight_sw(x, qp_half)), expected)

    def test_sw_weight_model(self, qp_half):
        """Test the WeightValue of the SW weight."""
        weight = weight_sw(1.0, qp_half)

        assert weight.value > 0
        assert weight.sign == 1
        assert weight.x == 1.0

    def test_sw_weight_underflow_keeps_log(self, qp_half):
        """Test that an underflowing weight still has an exact log."""
        weight = weight_sw(1e300, qp_half)

        assert weight.value == 0.0
        assert weight.log_value < -1e4

    @pytest.mark.parametrize("alpha", [0.5, 1.5, -0.5, 2.25])
    def test_qlaguerre_weight_positive(self, qp_half, alpha):
        """Test that the q-Laguerre weight is positive for non-integer alpha."""
        _, sign = log_weight_qlaguerre(1.3, alpha, qp_half)

        assert sign == 1

    def test_qlaguerre_weight_formula(self, ctx, oracle_ctx):
        """Test the q-Laguerre weight against its closed form."""
        qp = QPoint.from_q(0.5, ctx)
        mp = oracle_ctx.mp
        q, a, x = mp.mpf(0.5), mp.mpf(0.5), mp.mpf(0.7)

        expected = -mp.sin(mp.pi * a) / mp.pi * mp.qp(q, q) / mp.qp(q**-a, q) * x**a / mp.qp(-x, q)
        weight = weight_qlaguerre(0.7, 0.5, qp, ctx)

        assert abs(weight.value - float(expected)) <= 1e-14 * float(expected)

    def test_integer_alpha_unsupported(self, qp_half):
        """Test that integer alpha raises UnsupportedParameterError."""
        with pytest.raises(UnsupportedParameterError):
            log_weight_qlaguerre(1.0, 2, qp_half)

    @pytest.mark.parametrize("x", [0, -1])
    def test_nonpositive_argument(self, qp_half, x):
        """Test that x <= 0 raises DomainError."""
        with pytest.raises(DomainError):
            log_weight_sw(x, qp_half)
        with pytest.raises(DomainError):
            log_weight_qlaguerre(x, 0.5, qp_half)

    def test_alpha_below_minus_one(self, qp_half):
        """Test that alpha <= -1 raises DomainError."""
        with pytest.raises(DomainError):
            log_weight_qlaguerre(1.0, -1.5, qp_half)


class TestOrthonormal:
    """Tests for the orthonormal functions."""

    def test_sw_square(self, qp_half):
        """Test s_n^2 = q^n (q;q)_n w(x) S_n^2."""
        ctx = qp_half.ctx
        mp = ctx.mp
        x, n = mp.mpf(1.7), 4

        s = logc_to_complex(orthonormal_sw(x, n, qp_half), ctx)
        poly = logc_to_complex(stieltjes_wigert(x, n, qp_half), ctx)
        expected = mp.mpf(0.5) ** n * mp.qp(mp.mpf(0.5), mp.mpf(0.5), n) * mp.exp(
            log_weight_sw(x, qp_half)
        ) * poly**2

        assert _rel(s**2, expected) <= DUAL_PATH_TOLERANCE

    def test_qlaguerre_square(self, qp_half):
        """Test l_n^2 = q^n (q;q)_n / (q^{a+1};q)_n w(x) L_n^2."""
        ctx = qp_half.ctx
        mp = ctx.mp
        q = mp.mpf(0.5)
        spec = PolynomialSpec(n=3, alpha=0.5)

        value = logc_to_complex(orthonormal_qlaguerre(2.0, spec, qp_half), ctx)
        poly = logc_to_complex(q_laguerre(2.0, spec, qp_half), ctx)
        log_w, sign = log_weight_qlaguerre(2.0, 0.5, qp_half)
        expected = q**3 * mp.qp(q, q, 3) / mp.qp(q**1.5, q, 3) * sign * mp.exp(log_w) * poly**2

        assert _rel(value**2, expected) <= DUAL_PATH_TOLERANCE
