"""Exact identities used to cross-check independent evaluation paths."""

from typing import Any, Literal

from ..core.exceptions import DomainError
from ..core.nome import QPoint
from ..core.numerics import (
    PrecisionContext,
    logc,
    logc_from_complex,
    logc_mul,
    logc_rel_dev,
    resolve_context,
)
from ..functions.qfunctions import euler_Eq, q_gamma
from ..models.results import IdentityCheck
from ..qseries.pochhammer import qpoch_infinite
from ..theta.jacobi import theta_zq

# Identities must hold to 2^-(precision_bits - IDENTITY_SLACK_BITS).
IDENTITY_SLACK_BITS = 12


def _tolerance(ctx: PrecisionContext) -> Any:
    return ctx.mp.ldexp(ctx.mp.one, -(ctx.precision_bits - IDENTITY_SLACK_BITS))


def euler_reflection_identity(
    n: int,
    u: float,
    qp: QPoint,
    sign: Literal[1, -1] = 1,
    ctx: PrecisionContext | None = None,
) -> IdentityCheck:
    """
    Check E_q(s q^{1/2-n} e^{2 pi u}) against its theta-function form, s = +1 or -1.

        E_q(s q^{1/2-n} w) = s^n q^{-n^2/2} w^n theta(w; q^{1/2})
                             / ((q;q)_inf (-s q^{n+1/2} / w; q)_inf),   w = e^{2 pi u}

    with theta_3 for s = +1 and theta_4 for s = -1.

    Args:
        n: Non-negative shift
        u: Real exponent of w
        qp: Nome
        sign: +1 or -1
        ctx: Precision context

    Returns:
        IdentityCheck with both sides and their relative deviation

    Raises:
        DomainError: If n < 0 or sign is not +1 or -1
    """
    ctx = resolve_context(ctx, qp.ctx)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    mp = ctx.mp
    w = mp.exp(2 * mp.pi * mp.mpf(u))
    half = mp.mpf(1) / 2

    lhs = euler_Eq(sign * qp.power(half - n) * w, qp, ctx)

    theta = theta_zq(3 if sign == 1 else 4, w, mp.sqrt(qp.q), ctx)
    tail = qpoch_infinite(-sign * qp.power(n + half) / w, qp, ctx)
    growth = logc(
        -mp.mpf(n * n) / 2 * qp.log_q + n * mp.log(w) - mp.log(qpoch_infinite(qp.q, qp, ctx)),
        mp.pi if sign == -1 and n % 2 else 0,
        ctx,
    )
    rhs = logc_mul(growth, logc_from_complex(theta / tail, ctx), ctx)

    rel_dev = logc_rel_dev(lhs, rhs, ctx)
    tolerance = _tolerance(ctx)
    return IdentityCheck(
        name="euler-reflection" if sign == 1 else "euler-reflection-negative",
        parameters={"n": float(n), "u": float(u), "q": float(qp.q)},
        lhs=lhs,
        rhs=rhs,
        rel_dev=float(rel_dev),
        tolerance=float(tolerance),
        passed=bool(rel_dev <= tolerance),
    )


def qgamma_recurrence_identity(
    x: float, qp: QPoint, ctx: PrecisionContext | None = None
) -> IdentityCheck:
    """
    Check Gamma_q(x + 1) = (1 - q^x) / (1 - q) * Gamma_q(x).

    Raises:
        SingularityError: If x is a pole of Gamma_q
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    x_mp = mp.mpf(x)
    lhs = q_gamma(x_mp + 1, qp, ctx)
    factor = logc_from_complex((1 - qp.power(x_mp)) / (1 - qp.q), ctx)
    rhs = logc_mul(factor, q_gamma(x_mp, qp, ctx), ctx)
    rel_dev = logc_rel_dev(lhs, rhs, ctx)
    tolerance = _tolerance(ctx)
    return IdentityCheck(
        name="qgamma-recurrence",
        parameters={"x": float(x), "q": float(qp.q)},
        lhs=lhs,
        rhs=rhs,
        rel_dev=float(rel_dev),
        tolerance=float(tolerance),
        passed=bool(rel_dev <= tolerance),
    )
