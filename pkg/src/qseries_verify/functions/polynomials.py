"""Stieltjes-Wigert and q-Laguerre polynomials, their weights and orthonormal functions."""

from typing import Any

from ..core.exceptions import DomainError, UnsupportedParameterError
from ..core.nome import QPoint
from ..core.numerics import (
    LogComplex,
    PrecisionContext,
    logc,
    logc_from_complex,
    logc_mul,
    logc_pow_real,
    resolve_context,
)
from ..models.params import PolynomialSpec
from ..models.results import WeightValue
from ..qseries.pochhammer import qpoch_finite, qpoch_infinite
from .qfunctions import euler_Eq


def _finite_sum(first: Any, ratio: Any, n: int, ctx: PrecisionContext) -> Any:
    terms = [first]
    for k in range(n):
        terms.append(terms[-1] * ratio(k))
    return ctx.mp.fsum(terms)


def stieltjes_wigert(
    x: Any, n: int, qp: QPoint, ctx: PrecisionContext | None = None
) -> LogComplex:
    """
    Stieltjes-Wigert polynomial S_n(x; q) = sum_k q^{k^2} (-x)^k / ((q;q)_k (q;q)_{n-k}).

    Raises:
        DomainError: If n is negative
    """
    ctx = resolve_context(ctx, qp.ctx)
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    mp = ctx.mp
    x = mp.mpmathify(x)
    q = qp.q

    def ratio(k: int) -> Any:
        return -x * q ** (2 * k + 1) * (1 - q ** (n - k)) / (1 - q ** (k + 1))

    first = 1 / qpoch_finite(q, qp, n, ctx)
    return logc_from_complex(_finite_sum(first, ratio, n, ctx), ctx)


def _require_alpha(spec: PolynomialSpec) -> float:
    if spec.alpha is None:
        raise DomainError("q-Laguerre polynomials need alpha")
    return spec.alpha


def q_laguerre(
    x: Any, spec: PolynomialSpec, qp: QPoint, ctx: PrecisionContext | None = None
) -> LogComplex:
    """
    q-Laguerre polynomial in the orthogonal normalization.

    L_n(x) = sum_k (q^{a+1};q)_n q^{k^2+ak} (-x)^k / ((q;q)_k (q;q)_{n-k} (q^{a+1};q)_k)

    Args:
        x: Complex argument
        spec: Degree n and parameter alpha > -1
        qp: Nome
        ctx: Precision context

    Returns:
        L_n^(alpha)(x; q) as a LogComplex

    Raises:
        DomainError: If alpha is missing
    """
    ctx = resolve_context(ctx, qp.ctx)
    alpha = _require_alpha(spec)
    n = spec.n
    mp = ctx.mp
    x = mp.mpmathify(x)
    q = qp.q
    q_alpha = qp.power(alpha)

    def ratio(k: int) -> Any:
        qk1 = q ** (k + 1)
        return -x * q**k * qk1 * q_alpha * (1 - q ** (n - k)) / ((1 - qk1) * (1 - q_alpha * qk1))

    first = qpoch_finite(q_alpha * q, qp, n, ctx) / qpoch_finite(q, qp, n, ctx)
    return logc_from_complex(_finite_sum(first, ratio, n, ctx), ctx)


def _check_positive(x: Any) -> None:
    if x <= 0:
        raise DomainError(f"weight argument must be positive, got {x}")


def log_weight_sw(x: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> Any:
    """ln w_sw(x) at working precision."""
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    x = mp.mpf(x)
    _check_positive(x)
    log_q = qp.log_q
    shifted = mp.log(x) - log_q / 2
    return mp.log(-1 / (2 * mp.pi * log_q)) / 2 + shifted * shifted / (2 * log_q)


def weight_sw(x: Any, qp: QPoint) -> WeightValue:
    """
    Log-normal Stieltjes-Wigert weight sqrt(-1/(2 pi ln q)) exp{(ln(x/sqrt q))^2 / (2 ln q)}.

    Raises:
        DomainError: If x <= 0
    """
    log_value = log_weight_sw(x, qp)
    return WeightValue(
        x=float(x),
        value=float(qp.ctx.mp.exp(log_value)),
        log_value=float(log_value),
        sign=1,
    )


def log_weight_qlaguerre(
    x: Any, alpha: Any, qp: QPoint, ctx: PrecisionContext | None = None
) -> tuple[Any, int]:
    """
    (ln|w_ql(x)|, sign) at working precision.

    Raises:
        DomainError: If x <= 0 or alpha <= -1
        UnsupportedParameterError: If alpha is an integer
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    x = mp.mpf(x)
    alpha = mp.mpf(alpha)
    _check_positive(x)
    if alpha <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if alpha == mp.floor(alpha):
        raise UnsupportedParameterError(f"the q-Laguerre weight is 0/0 at integer alpha = {alpha}")

    scale = -mp.sin(mp.pi * alpha) / mp.pi
    reflected = qpoch_infinite(qp.power(-alpha), qp, ctx)
    growth = euler_Eq(x, qp, ctx)
    log_value = (
        mp.log(abs(scale))
        + mp.log(qpoch_infinite(qp.q, qp, ctx))
        - mp.log(abs(reflected))
        + alpha * mp.log(x)
        - growth.log_mag
    )
    sign = (1 if scale > 0 else -1) * (1 if reflected > 0 else -1)
    return log_value, sign


def weight_qlaguerre(
    x: Any, alpha: Any, qp: QPoint, ctx: PrecisionContext | None = None
) -> WeightValue:
    """
    q-Laguerre weight -sin(pi a)/pi * (q;q)_inf / (q^{-a};q)_inf * x^a / (-x;q)_inf.

    The sign follows sign((q^{-a};q)_inf) and is reported rather than assumed.

    Args:
        x: Positive argument
        alpha: Parameter, > -1 and not an integer
        qp: Nome
        ctx: Precision context

    Returns:
        WeightValue with value, log|value| and sign

    Raises:
        DomainError: If x <= 0 or alpha <= -1
        UnsupportedParameterError: If alpha is an integer
    """
    ctx = resolve_context(ctx, qp.ctx)
    log_value, sign = log_weight_qlaguerre(x, alpha, qp, ctx)
    return WeightValue(
        x=float(x),
        value=float(sign * ctx.mp.exp(log_value)),
        log_value=float(log_value),
        sign=sign,
    )


def orthonormal_sw(x: Any, n: int, qp: QPoint, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Orthonormal Stieltjes-Wigert function sqrt(q^n (q;q)_n w_sw(x)) S_n(x; q).

    Raises:
        DomainError: If x <= 0 or n < 0
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    polynomial = stieltjes_wigert(x, n, qp, ctx)
    log_qq = mp.log(qpoch_finite(qp.q, qp, n, ctx))
    log_norm = (n * qp.log_q + log_qq + log_weight_sw(x, qp, ctx)) / 2
    return logc_mul(logc(log_norm, 0, ctx), polynomial, ctx)


def orthonormal_qlaguerre(
    x: Any, spec: PolynomialSpec, qp: QPoint, ctx: PrecisionContext | None = None
) -> LogComplex:
    """
    Orthonormal q-Laguerre function sqrt(q^n (q;q)_n / (q^{a+1};q)_n w_ql(x)) L_n(x; q).

    A negative weight gives the principal square root, phase pi/2.

    Raises:
        DomainError: If x <= 0 or alpha is missing or <= -1
        UnsupportedParameterError: If alpha is an integer
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    alpha = _require_alpha(spec)
    n = spec.n
    log_weight, sign = log_weight_qlaguerre(x, alpha, qp, ctx)
    pochhammers = qpoch_finite(qp.q, qp, n, ctx) / qpoch_finite(qp.power(alpha + 1), qp, n, ctx)
    squared = logc(
        n * qp.log_q + mp.log(pochhammers) + log_weight,
        0 if sign > 0 else mp.pi,
        ctx,
    )
    return logc_mul(logc_pow_real(squared, mp.mpf(0.5), ctx), q_laguerre(x, spec, qp, ctx), ctx)
