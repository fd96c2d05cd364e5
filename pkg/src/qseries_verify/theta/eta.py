"""Dedekind eta and the scaled asymptotic of (q;q)_inf."""

from typing import Any

from ..core.config import get_config
from ..core.exceptions import DomainError
from ..core.nome import QPoint
from ..core.numerics import (
    PrecisionContext,
    logc,
    logc_div,
    logc_from_complex,
    logc_rel_dev,
    resolve_context,
)
from ..models.results import EtaAsymptoticReport
from ..qseries.pochhammer import qpoch_infinite, qpoch_nome
from ..utils.logger import get_logger

logger = get_logger(__name__)

# Below this Im(tau) the product is evaluated after tau -> -1/tau.
DIRECT_PRODUCT_MIN_IMAG = 1.0


def eta_product(tau: Any, ctx: PrecisionContext | None = None) -> Any:
    """
    e^{pi i tau / 12} prod_{k>=1} (1 - e^{2 pi i k tau}) with no transformation.

    Raises:
        DomainError: If Im(tau) <= 0
    """
    ctx = resolve_context(ctx)
    mp = ctx.mp
    tau = mp.mpc(tau)
    if tau.imag <= 0:
        raise DomainError(f"Im(tau) must be positive, got {tau}")
    nome = mp.expjpi(2 * tau)
    return mp.expjpi(tau / 12) * qpoch_nome(nome, nome, ctx)


def dedekind_eta(tau: Any, ctx: PrecisionContext | None = None) -> Any:
    """
    Dedekind eta function.

    Translations tau -> tau - s use eta(tau + 1) = e^{pi i / 12} eta(tau); while
    Im(tau) < 1 and |tau| < 1, eta(tau) = eta(-1/tau) / sqrt(tau / i) moves the
    point to a larger imaginary part before the product is taken.

    Args:
        tau: Point in the upper half-plane
        ctx: Precision context

    Returns:
        eta(tau) as an mpmath complex

    Raises:
        DomainError: If Im(tau) <= 0
    """
    ctx = resolve_context(ctx)
    mp = ctx.mp
    tau = mp.mpc(tau)
    if tau.imag <= 0:
        raise DomainError(f"Im(tau) must be positive, got {tau}")
    factor = mp.mpc(1)
    while True:
        shift = int(mp.nint(tau.real))
        if shift:
            tau = tau - shift
            factor *= mp.expjpi(mp.mpf(shift) / 12)
        if tau.imag >= DIRECT_PRODUCT_MIN_IMAG or abs(tau) >= 1:
            break
        factor /= mp.sqrt(tau / mp.j)
        tau = -1 / tau
        logger.debug(f"eta reduced to Im(tau) = {float(tau.imag):.6g}")
    return factor * eta_product(tau, ctx)


def qq_infinity_scaled(
    gamma: float,
    a_exp: float,
    n: int,
    ctx: PrecisionContext | None = None,
    envelope_factor: float | None = None,
) -> EtaAsymptoticReport:
    """
    Compare (q;q)_inf at q = exp(-2 pi / (gamma n^a)) with its closed form.

    The closed form is sqrt(gamma n^a) exp{(pi/12)((gamma n^a)^-1 - gamma n^a)},
    with relative error of order exp(-2 pi gamma n^a). The reciprocal form is
    checked as well.

    Args:
        gamma: Positive scaling factor
        a_exp: Exponent a in (0, 1)
        n: Positive index
        ctx: Precision context
        envelope_factor: Constant applied to the envelope in the pass flag

    Returns:
        EtaAsymptoticReport with the direct product, the main term and deviations

    Raises:
        DomainError: If a parameter is out of range
    """
    ctx = resolve_context(ctx)
    if not 0 < a_exp < 1:
        raise DomainError(f"a_exp must lie in (0, 1), got {a_exp}")
    if gamma <= 0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if envelope_factor is None:
        envelope_factor = get_config().envelope_factor

    mp = ctx.mp
    scale = mp.mpf(gamma) * mp.power(n, mp.mpf(a_exp))
    qp = QPoint.from_log_q(-2 * mp.pi / scale, ctx)
    direct = logc_from_complex(qpoch_infinite(qp.q, qp, ctx), ctx)
    main = logc(mp.log(scale) / 2 + mp.pi / 12 * (1 / scale - scale), 0, ctx)
    one = logc(0, 0, ctx)

    rel_dev = logc_rel_dev(direct, main, ctx)
    reciprocal_rel_dev = logc_rel_dev(logc_div(one, direct, ctx), logc_div(one, main, ctx), ctx)
    envelope = mp.exp(-2 * mp.pi * scale)
    return EtaAsymptoticReport(
        gamma=gamma,
        a_exp=a_exp,
        n=n,
        direct=direct,
        main_term=main,
        rel_dev=float(rel_dev),
        reciprocal_rel_dev=float(reciprocal_rel_dev),
        envelope=float(envelope),
        within_envelope=bool(rel_dev <= envelope_factor * envelope),
    )
