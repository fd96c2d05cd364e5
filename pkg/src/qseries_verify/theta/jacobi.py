"""Jacobi theta functions: defining series, triple products and modular maps.

Conventions follow z = e^{2 pi i v}, q = e^{pi i tau} with Im(tau) > 0, and

    theta_1(v|tau) = -i sum (-1)^k q^{(k+1/2)^2} e^{(2k+1) pi i v}
    theta_2(v|tau) =    sum        q^{(k+1/2)^2} e^{(2k+1) pi i v}
    theta_3(v|tau) =    sum        q^{k^2}       e^{2k pi i v}
    theta_4(v|tau) =    sum (-1)^k q^{k^2}       e^{2k pi i v}
"""

from typing import Any

from ..core.exceptions import DomainError, ResourceError
from ..core.nome import ModularPoint
from ..core.numerics import PrecisionContext, resolve_context
from ..qseries.pochhammer import qpoch_nome
from ..utils.logger import get_logger

logger = get_logger(__name__)

# Below this Im(tau) the series is evaluated after tau -> -1/tau.
DIRECT_SERIES_MIN_IMAG = 0.5

# Kind of the theta function on the other side of tau -> -1/tau.
_MODULAR_PARTNER = {1: 1, 2: 4, 3: 3, 4: 2}


def _check_kind(kind: int) -> None:
    if kind not in (1, 2, 3, 4):
        raise DomainError(f"theta kind must be 1, 2, 3 or 4, got {kind}")


def _check_tau(tau: Any) -> None:
    if tau.imag <= 0:
        raise DomainError(f"Im(tau) must be positive, got {tau}")


def modular_prefactor(v: Any, tau: Any, ctx: PrecisionContext) -> Any:
    """sqrt(tau / i) * exp(pi i v^2 / tau) on the principal branch."""
    mp = ctx.mp
    return mp.sqrt(tau / mp.j) * mp.exp(mp.j * mp.pi * v * v / tau)


def theta_series(kind: int, v: Any, tau: Any, ctx: PrecisionContext) -> Any:
    """
    Sum the defining series directly, without any transformation.

    Terms are summed outward from the largest one; each direction stops once
    the Gaussian tail bound drops below eps times the largest term.

    Raises:
        ResourceError: If more than ctx.max_terms terms are needed
    """
    mp = ctx.mp
    v = mp.mpc(v)
    tau = mp.mpc(tau)
    shift = mp.mpf(0.5) if kind in (1, 2) else mp.zero
    alternating = kind in (1, 4)
    im_tau = tau.imag
    im_v = v.imag

    def term(k: int) -> Any:
        c = k + shift
        value = mp.exp(mp.j * mp.pi * (tau * c * c + 2 * c * v))
        return -value if alternating and k % 2 else value

    def log_size(k: int) -> Any:
        c = k + shift
        return -mp.pi * (im_tau * c * c + 2 * c * im_v)

    peak = int(mp.nint(-im_v / im_tau - shift))
    log_eps = mp.log(ctx.eps)
    largest = log_size(peak)
    terms = [term(peak)]
    for direction in (1, -1):
        k = peak
        while True:
            k += direction
            if abs(k - peak) > ctx.max_terms:
                raise ResourceError(
                    f"theta series did not converge within {ctx.max_terms} terms",
                    required_terms=abs(k - peak),
                )
            size = log_size(k)
            terms.append(term(k))
            # ratio of consecutive term sizes beyond k; decreasing away from the peak
            c = k + shift
            log_ratio = -mp.pi * (im_tau * (2 * c * direction + 1) + 2 * direction * im_v)
            if log_ratio < 0:
                ratio = mp.exp(log_ratio)
                if size + mp.log(ratio / (1 - ratio)) < log_eps + largest:
                    break
    total = mp.fsum(terms)
    return -mp.j * total if kind == 1 else total


def _reduce(kind: int, v: Any, tau: Any, ctx: PrecisionContext) -> tuple[int, Any, Any, Any]:
    """
    Move (v, tau) to where the series converges fast.

    Returns (kind', v', tau', factor) with theta_kind(v|tau) = factor * theta_kind'(v'|tau').
    """
    mp = ctx.mp
    factor = mp.mpc(1)
    while True:
        shift = int(mp.nint(tau.real))
        if shift:
            tau = tau - shift
            if kind in (1, 2):
                factor *= mp.expjpi(mp.mpf(shift) / 4)
            elif shift % 2:
                kind = 7 - kind
        if tau.imag >= DIRECT_SERIES_MIN_IMAG:
            break
        prefactor = modular_prefactor(v, tau, ctx)
        factor /= -mp.j * prefactor if kind == 1 else prefactor
        kind = _MODULAR_PARTNER[kind]
        v = v / tau
        tau = -1 / tau
        logger.debug(f"theta reduced to Im(tau) = {float(tau.imag):.6g}")

    # quasi-periodicity v -> v - m tau keeps |Im v| below Im(tau) / 2
    m = int(mp.nint(v.imag / tau.imag))
    if m:
        v = v - m * tau
        factor *= mp.exp(-mp.j * mp.pi * (tau * m * m + 2 * m * v))
        if kind in (1, 4) and m % 2:
            factor = -factor
    return kind, v, tau, factor


def theta(kind: int, p: ModularPoint, ctx: PrecisionContext | None = None) -> Any:
    """
    Jacobi theta function theta_kind(v | tau).

    When Im(tau) < 1/2 the modular transformation is applied first so the
    series runs at a larger imaginary part.

    Args:
        kind: 1, 2, 3 or 4
        p: Argument and modular parameter
        ctx: Precision context

    Returns:
        The theta value as an mpmath complex

    Raises:
        DomainError: If the kind is unknown or Im(tau) <= 0
    """
    ctx = resolve_context(ctx)
    _check_kind(kind)
    mp = ctx.mp
    tau = mp.mpc(p.tau)
    _check_tau(tau)
    v = mp.mpc(p.v)
    if (kind == 1 and v == 0) or (kind == 2 and v == mp.mpf(0.5)):
        return mp.mpc(0)
    reduced_kind, v, tau, factor = _reduce(kind, v, tau, ctx)
    return factor * theta_series(reduced_kind, v, tau, ctx)


def theta_triple_product(kind: int, p: ModularPoint, ctx: PrecisionContext | None = None) -> Any:
    """
    Theta function from its Jacobi triple product, using products with nome q^2.

    Args:
        kind: 1, 2, 3 or 4
        p: Argument and modular parameter
        ctx: Precision context

    Returns:
        The theta value as an mpmath complex

    Raises:
        DomainError: If the kind is unknown or Im(tau) <= 0
    """
    ctx = resolve_context(ctx)
    _check_kind(kind)
    mp = ctx.mp
    v = mp.mpc(p.v)
    tau = mp.mpc(p.tau)
    _check_tau(tau)
    q = mp.expjpi(tau)
    nome = mp.expjpi(2 * tau)
    z = mp.expjpi(2 * v)
    base = qpoch_nome(nome, nome, ctx)
    if kind in (1, 2):
        quarter = mp.expjpi(tau / 4)
        sign = 1 if kind == 1 else -1
        trig = mp.sinpi(v) if kind == 1 else mp.cospi(v)
        return (
            2
            * quarter
            * trig
            * base
            * qpoch_nome(sign * nome * z, nome, ctx)
            * qpoch_nome(sign * nome / z, nome, ctx)
        )
    sign = -1 if kind == 3 else 1
    return base * qpoch_nome(sign * q * z, nome, ctx) * qpoch_nome(sign * q / z, nome, ctx)


def theta_modular(kind: int, p: ModularPoint, ctx: PrecisionContext | None = None) -> Any:
    """
    theta_kind(v/tau | -1/tau) from the right side of the modular transformation.

    Kind 1 maps to -i P theta_1, 2 to P theta_4, 3 to P theta_3 and 4 to P theta_2,
    with P = sqrt(tau/i) e^{pi i v^2 / tau}.

    Raises:
        DomainError: If the kind is unknown or Im(tau) <= 0
    """
    ctx = resolve_context(ctx)
    _check_kind(kind)
    mp = ctx.mp
    v = mp.mpc(p.v)
    tau = mp.mpc(p.tau)
    _check_tau(tau)
    prefactor = modular_prefactor(v, tau, ctx)
    value = theta(_MODULAR_PARTNER[kind], p, ctx)
    if kind == 1:
        return -mp.j * prefactor * value
    return prefactor * value


def theta_zq(kind: int, z: Any, q: Any, ctx: PrecisionContext | None = None) -> Any:
    """
    Theta function in the (z; q) convention, z = e^{2 pi i v}, q = e^{pi i tau}.

    v is taken from the principal logarithm, so Re(v) lies in (-1/2, 1/2].

    Args:
        kind: 1, 2, 3 or 4
        z: Nonzero complex argument
        q: Nome with 0 < |q| < 1
        ctx: Precision context

    Raises:
        DomainError: If z = 0 or q is not a valid nome
    """
    ctx = resolve_context(ctx)
    mp = ctx.mp
    z = mp.mpc(z)
    q = mp.mpc(q)
    if z == 0:
        raise DomainError("theta argument z must be nonzero")
    if not 0 < abs(q) < 1:
        raise DomainError(f"nome must satisfy 0 < |q| < 1, got {q}")
    v = mp.log(z) / (2 * mp.pi * mp.j)
    tau = mp.log(q) / (mp.pi * mp.j)
    return theta(kind, ModularPoint(v=v, tau=tau), ctx)
