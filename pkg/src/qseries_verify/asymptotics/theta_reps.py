"""Exact theta-function representations at scaled arguments with certified remainders.

Each family is written as f(x_n) = P_n(z) * (theta_4(w; q) + e(n)), where P_n is an
explicit prefactor and |e(n)| has an explicit bound once n passes a large-n gate.
"""

from typing import Any, Literal

from ..core.exceptions import DomainError, RegimeError
from ..core.nome import QPoint
from ..core.numerics import (
    LogComplex,
    PrecisionContext,
    logc,
    logc_div,
    logc_from_complex,
    logc_mul,
    logc_rel_dev,
    logc_to_complex,
    resolve_context,
)
from ..functions.polynomials import q_laguerre, stieltjes_wigert
from ..functions.qfunctions import jackson_J2, ramanujan_Aq
from ..models.params import PolynomialSpec
from ..models.results import ThetaRepResult
from ..qseries.pochhammer import chi, qpoch_infinite
from ..theta.jacobi import theta_zq
from ..utils.logger import get_logger

logger = get_logger(__name__)

Family = Literal["aq", "bessel", "sw", "laguerre"]

AQ_CONSTANT = 4
BESSEL_CONSTANT = 12
SW_CONSTANT = 12
LAGUERRE_CONSTANT = 60


def _check_nonzero(z: Any) -> None:
    if z == 0:
        raise DomainError("theta representations need z != 0")


def _check_gate(qp: QPoint, n: int, divisor: int) -> None:
    """Require 2 q^{n/divisor} / (1 - q) < 1."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    gate = 2 * qp.power(qp.ctx.mp.mpf(n) / divisor) / (1 - qp.q)
    if not gate < 1:
        raise RegimeError(
            f"n = {n} is below the regime gate 2 q^(n/{divisor}) / (1 - q) < 1 "
            f"(measured {float(gate):.6g})",
            gate_value=float(gate),
        )


def _half_bound(z: Any, qp: QPoint, n: int, constant: int, ctx: PrecisionContext) -> Any:
    """constant * theta_3(1/|z|; q) {q^{n/2}/(1-q) + q^{[n/2]^2} / |z|^[n/2]}."""
    mp = ctx.mp
    size = abs(z)
    half = n // 2
    theta3 = theta_zq(3, 1 / size, qp.q, ctx).real
    brace = qp.power(mp.mpf(n) / 2) / (1 - qp.q) + qp.power(half * half) / size**half
    return constant * theta3 * brace


def _quarter_bound(z: Any, qp: QPoint, n: int, constant: int, ctx: PrecisionContext) -> Any:
    """constant * theta_3(q^chi/|z|; q) times the three-term brace with [n/4]."""
    mp = ctx.mp
    size = abs(z)
    parity = chi(n)
    quarter = n // 4
    theta3 = theta_zq(3, qp.power(parity) / size, qp.q, ctx).real
    brace = (
        qp.power(mp.mpf(n) / 4) / (1 - qp.q)
        + size**quarter * qp.power(quarter * quarter - parity * quarter)
        + qp.power(quarter * quarter + parity * quarter) / size**quarter
    )
    return constant * theta3 * brace


def _assemble(
    family: Family,
    z: Any,
    qp: QPoint,
    n: int,
    extra_param: float | None,
    lhs: LogComplex,
    prefactor: LogComplex,
    theta_term: Any,
    bound: Any,
    ctx: PrecisionContext,
) -> ThetaRepResult:
    scaled = logc_to_complex(logc_div(lhs, prefactor, ctx), ctx)
    residual = scaled - theta_term
    rebuilt = logc_mul(prefactor, logc_from_complex(theta_term + residual, ctx), ctx)
    reconstruction = logc_rel_dev(rebuilt, lhs, ctx) if not lhs.is_zero else ctx.mp.zero
    satisfied = bool(abs(residual) <= bound)
    if not satisfied:
        logger.warning(
            f"{family} remainder exceeds its bound at n = {n}: "
            f"{float(abs(residual)):.6g} > {float(bound):.6g}"
        )
    return ThetaRepResult(
        family=family,
        q=float(qp.q),
        z=complex(z),
        n=n,
        extra_param=extra_param,
        lhs=lhs,
        prefactor=prefactor,
        theta_term=complex(theta_term),
        residual=complex(residual),
        bound=float(bound),
        satisfied=satisfied,
        reconstruction_rel_dev=float(reconstruction),
    )


def _log_power(z: Any, exponent: Any, ctx: PrecisionContext) -> LogComplex:
    """Principal z**exponent for a real exponent."""
    log_z = ctx.mp.log(z)
    return logc(exponent * log_z.real, exponent * log_z.imag, ctx)


def _log_qq(qp: QPoint, ctx: PrecisionContext) -> Any:
    return ctx.mp.log(qpoch_infinite(qp.q, qp, ctx))


def aq_theta_rep(
    z: Any, qp: QPoint, n: int, ctx: PrecisionContext | None = None
) -> ThetaRepResult:
    """
    A_q(q^{-2n} z) = (-z)^n / ((q;q)_inf q^{n^2}) * (theta_4(1/z; q) + e(n)).

    Args:
        z: Nonzero complex argument
        qp: Nome
        n: Shift index, above the gate 2 q^{n/2} / (1 - q) < 1
        ctx: Precision context

    Returns:
        ThetaRepResult with |e(n)| against 4 theta_3(1/|z|; q){...}

    Raises:
        DomainError: If z = 0
        RegimeError: If n is below the gate
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    z = mp.mpc(z)
    _check_nonzero(z)
    _check_gate(qp, n, 2)
    lhs = ramanujan_Aq(z * qp.power(-2 * n), qp, ctx)
    prefactor = logc_div(
        _log_power(-z, n, ctx),
        logc(_log_qq(qp, ctx) + n * n * qp.log_q, 0, ctx),
        ctx,
    )
    theta_term = theta_zq(4, 1 / z, qp.q, ctx)
    bound = _half_bound(z, qp, n, AQ_CONSTANT, ctx)
    return _assemble("aq", z, qp, n, None, lhs, prefactor, theta_term, bound, ctx)


def bessel_theta_rep(
    z: Any, nu: float, qp: QPoint, n: int, ctx: PrecisionContext | None = None
) -> ThetaRepResult:
    """
    J2_nu(2 sqrt(z q^{-2n-nu}); q) = z^{n+nu/2} / ((-1)^n (q;q)_inf^2 q^{n^2+n nu+nu^2/2})
    * (theta_4(1/z; q) + e(n)).

    Raises:
        DomainError: If z = 0 or nu <= -1
        RegimeError: If 2 q^{n/2} / (1 - q) >= 1
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    z = mp.mpc(z)
    if nu <= -1:
        raise DomainError(f"q-Bessel order must exceed -1, got {nu}")
    _check_nonzero(z)
    _check_gate(qp, n, 2)
    nu_mp = mp.mpf(nu)
    argument = 2 * mp.sqrt(z * qp.power(-2 * n - nu_mp))
    lhs = jackson_J2(argument, nu_mp, qp, ctx)
    denominator = logc(
        2 * _log_qq(qp, ctx) + (n * n + n * nu_mp + nu_mp * nu_mp / 2) * qp.log_q,
        mp.pi if n % 2 else 0,
        ctx,
    )
    prefactor = logc_div(_log_power(z, n + nu_mp / 2, ctx), denominator, ctx)
    theta_term = theta_zq(4, 1 / z, qp.q, ctx)
    bound = _half_bound(z, qp, n, BESSEL_CONSTANT, ctx)
    return _assemble("bessel", z, qp, n, float(nu), lhs, prefactor, theta_term, bound, ctx)


def _polynomial_prefactor(z: Any, qp: QPoint, n: int, ctx: PrecisionContext) -> LogComplex:
    """(-z)^m / ((q;q)_inf^2 q^{m(n-m)}) with m = [n/2]."""
    m = n // 2
    return logc_div(
        _log_power(-z, m, ctx),
        logc(2 * _log_qq(qp, ctx) + m * (n - m) * qp.log_q, 0, ctx),
        ctx,
    )


def sw_theta_rep(
    z: Any, qp: QPoint, n: int, ctx: PrecisionContext | None = None
) -> ThetaRepResult:
    """
    S_n(z q^{-n}; q) = (-z)^m / ((q;q)_inf^2 q^{m(n-m)}) * (theta_4(q^chi(n)/z; q) + e(n)),
    m = [n/2].

    Raises:
        DomainError: If z = 0
        RegimeError: If 2 q^{n/4} / (1 - q) >= 1
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    z = mp.mpc(z)
    _check_nonzero(z)
    _check_gate(qp, n, 4)
    lhs = stieltjes_wigert(z * qp.power(-n), n, qp, ctx)
    prefactor = _polynomial_prefactor(z, qp, n, ctx)
    theta_term = theta_zq(4, qp.power(chi(n)) / z, qp.q, ctx)
    bound = _quarter_bound(z, qp, n, SW_CONSTANT, ctx)
    return _assemble("sw", z, qp, n, None, lhs, prefactor, theta_term, bound, ctx)


def laguerre_theta_rep(
    z: Any, alpha: float, qp: QPoint, n: int, ctx: PrecisionContext | None = None
) -> ThetaRepResult:
    """
    L_n^(alpha)(z q^{-n-alpha}; q) with the Stieltjes-Wigert prefactor and theta term.

    The remainder bound carries the constant 60.

    Raises:
        DomainError: If z = 0 or alpha <= -1
        RegimeError: If 2 q^{n/4} / (1 - q) >= 1
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    z = mp.mpc(z)
    spec = PolynomialSpec(n=n, alpha=alpha)
    _check_nonzero(z)
    _check_gate(qp, n, 4)
    lhs = q_laguerre(z * qp.power(-n - mp.mpf(alpha)), spec, qp, ctx)
    prefactor = _polynomial_prefactor(z, qp, n, ctx)
    theta_term = theta_zq(4, qp.power(chi(n)) / z, qp.q, ctx)
    bound = _quarter_bound(z, qp, n, LAGUERRE_CONSTANT, ctx)
    return _assemble("laguerre", z, qp, n, float(alpha), lhs, prefactor, theta_term, bound, ctx)


def theta_rep(
    family: Family,
    z: Any,
    qp: QPoint,
    n: int,
    param: float | None = None,
    ctx: PrecisionContext | None = None,
) -> ThetaRepResult:
    """Dispatch to the representation of ``family``; ``param`` is nu or alpha."""
    if family not in ("aq", "bessel", "sw", "laguerre"):
        raise DomainError(f"unknown theta representation family: {family}")
    if family == "aq":
        return aq_theta_rep(z, qp, n, ctx)
    if family == "sw":
        return sw_theta_rep(z, qp, n, ctx)
    if param is None:
        raise DomainError(f"the {family} representation needs its order parameter")
    if family == "bessel":
        return bessel_theta_rep(z, param, qp, n, ctx)
    return laguerre_theta_rep(z, param, qp, n, ctx)
