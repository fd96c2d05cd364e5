"""Euler's q-exponential, the q-Gamma function, Ramanujan's A_q and Jackson's J2.

All four return :class:`LogComplex` values: in the scaled regimes their moduli
reach exp(pi n^{2-a}).
"""

from typing import Any

from ..core.exceptions import DomainError, SingularityError
from ..core.nome import QPoint
from ..core.numerics import (
    LogComplex,
    PrecisionContext,
    logc,
    logc_div,
    logc_from_complex,
    logc_mul,
    logc_zero,
    resolve_context,
)
from ..qseries.pochhammer import qpoch_infinite
from ..qseries.series import certified_sum
from ..utils.logger import get_logger

logger = get_logger(__name__)


def euler_Eq(z: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Euler's q-exponential E_q(z) = (-z; q)_inf.

    For |z| > 1 the first m factors, where m is the first index with |z| q^m < 1,
    are rewritten as z^m q^{m(m-1)/2} prod_{k<m} (1 + q^{-k}/z) so that the
    growth z^m q^{m(m-1)/2} is carried in the log domain.

    Args:
        z: Complex argument
        qp: Nome
        ctx: Precision context

    Returns:
        E_q(z) as a LogComplex

    Raises:
        ResourceError: If the product needs more than ctx.max_terms factors
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    z = mp.mpmathify(z)
    if z == 0:
        return logc(0, 0, ctx)
    size = abs(z)
    if size <= 1:
        return logc_from_complex(qpoch_infinite(-z, qp, ctx), ctx)

    m = int(mp.floor(mp.log(size) / -qp.log_q)) + 1
    logger.debug(f"E_q split after {m} head factors")
    head = mp.one
    q_inverse_k = mp.one
    inverse_q = 1 / qp.q
    for _ in range(m):
        head *= 1 + q_inverse_k / z
        q_inverse_k *= inverse_q
    if head == 0:
        return logc_zero(ctx)
    growth = logc(
        m * mp.log(size) + mp.mpf(m * (m - 1)) / 2 * qp.log_q,
        m * mp.arg(z),
        ctx,
    )
    tail = logc_from_complex(qpoch_infinite(-z * qp.power(m), qp, ctx), ctx)
    return logc_mul(logc_mul(growth, logc_from_complex(head, ctx), ctx), tail, ctx)


def q_gamma(x: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    q-Gamma function (q;q)_inf / (q^x;q)_inf * (1 - q)^{1-x} for real x.

    (q^x; q)_inf is taken as E_q(-q^x), so very negative x (huge q^x) stays in
    the log domain.

    Raises:
        SingularityError: At the poles x = 0, -1, -2, ... or when (q^x;q)_inf
            vanishes at working precision
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    x = mp.mpf(x)
    if x <= 0 and x == mp.floor(x):
        raise SingularityError(f"q-Gamma has a pole at x = {x}")
    qx = qp.power(x)
    denominator = euler_Eq(-qx, qp, ctx)
    if denominator.is_zero:
        raise SingularityError(f"(q^x; q)_inf vanishes at x = {x}")
    numerator = logc(
        mp.log(qpoch_infinite(qp.q, qp, ctx)) + (1 - x) * mp.log(1 - qp.q), 0, ctx
    )
    return logc_div(numerator, denominator, ctx)


def ramanujan_Aq(z: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Ramanujan's function A_q(z) = sum_k q^{k^2} (-z)^k / (q;q)_k.

    Raises:
        ResourceError: If the series needs more than ctx.max_terms terms
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    z = mp.mpmathify(z)
    abs_z = abs(z)
    q = qp.q

    def ratio(k: int) -> Any:
        return -z * q ** (2 * k + 1) / (1 - q ** (k + 1))

    def majorant(k: int) -> Any:
        return abs_z * q ** (2 * k + 1) / (1 - q ** (k + 1))

    return logc_from_complex(certified_sum(mp.one, ratio, majorant, ctx, "A_q series"), ctx)


def jackson_J2(z: Any, nu: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Jackson's q-Bessel function of the second kind.

    J2_nu(z; q) = (q^{nu+1};q)_inf / (q;q)_inf
                  * sum_k (-1)^k (z/2)^{nu+2k} q^{k(nu+k)} / ((q;q)_k (q^{nu+1};q)_k)

    (z/2)^nu is the principal power.

    Args:
        z: Complex argument
        nu: Order, nu > -1
        qp: Nome
        ctx: Precision context

    Returns:
        J2_nu(z; q) as a LogComplex

    Raises:
        DomainError: If nu <= -1
        SingularityError: If z = 0 and nu < 0
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    nu = mp.mpf(nu)
    if nu <= -1:
        raise DomainError(f"q-Bessel order must exceed -1, got {nu}")
    z = mp.mpmathify(z)
    if z == 0:
        if nu == 0:
            return logc(0, 0, ctx)
        if nu > 0:
            return logc_zero(ctx)
        raise SingularityError(f"(z/2)^nu is singular at z = 0 for nu = {nu}")

    q = qp.q
    half = z / 2
    w = half * half
    abs_w = abs(w)
    q_nu = qp.power(nu)

    def ratio(k: int) -> Any:
        qk1 = q ** (k + 1)
        return -w * q**k * qk1 * q_nu / ((1 - qk1) * (1 - q_nu * qk1))

    def majorant(k: int) -> Any:
        qk1 = q ** (k + 1)
        return abs_w * q**k * qk1 * q_nu / ((1 - qk1) * (1 - q_nu * qk1))

    total = certified_sum(mp.one, ratio, majorant, ctx, "J2 series")
    log_half = mp.log(half)
    power = logc(nu * log_half.real, nu * log_half.imag, ctx)
    normalizer = logc(
        mp.log(qpoch_infinite(q_nu * q, qp, ctx)) - mp.log(qpoch_infinite(q, qp, ctx)), 0, ctx
    )
    return logc_mul(logc_mul(normalizer, power, ctx), logc_from_complex(total, ctx), ctx)
