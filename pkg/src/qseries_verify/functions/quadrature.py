"""Orthogonality Gram matrices of the polynomial families by tanh-sinh quadrature.

Integrals over x in (0, inf) are taken in t = ln x, where both weights decay like
a Gaussian, on a window found by scanning the log-integrand and split into panels.
The panels go to mpmath's ``quad`` (tanh-sinh by default).
"""

from collections.abc import Callable
from typing import Any, Literal

from ..core.config import get_config
from ..core.exceptions import ConfigurationError, ResourceError
from ..core.nome import QPoint
from ..core.numerics import PrecisionContext, logc_to_complex
from ..models.params import PolynomialSpec
from ..models.results import OrthogonalityResult
from ..qseries.pochhammer import qpoch_finite
from ..utils.logger import get_logger
from .polynomials import log_weight_qlaguerre, log_weight_sw, q_laguerre, stieltjes_wigert

logger = get_logger(__name__)

Family = Literal["sw", "qlaguerre"]

PANEL_WIDTH = 2
SCAN_STEP = 1
MAX_SCAN_STEPS = 10_000


def _scan_window(log_envelope: Callable[[Any], Any], ctx: PrecisionContext) -> tuple[int, int]:
    """Integer t-window outside which the log-integrand sits a working precision below its peak."""
    mp = ctx.mp
    cutoff = ctx.working_bits * mp.log(2)
    peak = log_envelope(mp.zero)
    bounds = []
    for direction in (1, -1):
        t = 0
        for _ in range(MAX_SCAN_STEPS):
            t += direction * SCAN_STEP
            value = log_envelope(mp.mpf(t))
            peak = max(peak, value)
            if value < peak - cutoff:
                break
        else:
            raise ResourceError(
                "integrand window scan did not terminate", required_terms=MAX_SCAN_STEPS
            )
        bounds.append(t)
    logger.debug(f"quadrature window [{bounds[1]}, {bounds[0]}]")
    return bounds[1], bounds[0]


def orthogonality_tolerance(ctx: PrecisionContext) -> float:
    """Pass threshold of a Gram matrix: the square root of the working tolerance."""
    return float(ctx.mp.sqrt(ctx.tolerance))


def orthogonality_matrix(
    family: Family,
    q: float,
    max_degree: int,
    alpha: float | None = None,
    ctx: PrecisionContext | None = None,
) -> OrthogonalityResult:
    """
    Gram matrix int_0^inf P_m(x) P_n(x) w(x) dx for m, n <= max_degree.

    Each entry is one ``quad`` call over the panels of the window, with tanh-sinh
    degree capped at the configured quadrature level. Integrand values are shared
    between entries since every call visits the same nodes. The relative diagonal
    error and the off-diagonal entries scaled by sqrt(T_m T_n) must both stay below
    sqrt(2^-precision_bits), so raising the quadrature precision tightens the check.

    Args:
        family: "sw" for Stieltjes-Wigert, "qlaguerre" for q-Laguerre
        q: Nome in (0, 1)
        max_degree: Largest degree in the matrix
        alpha: q-Laguerre parameter (non-integer, > -1)
        ctx: Precision context; the configured quadrature precision when omitted

    Returns:
        OrthogonalityResult with the matrix and its deviations from the norms

    Raises:
        ConfigurationError: If the family is unknown, max_degree < 0 or alpha is missing
    """
    config = get_config()
    if ctx is None:
        ctx = PrecisionContext.from_config(config).with_precision(config.quadrature_precision_bits)
    if max_degree < 0:
        raise ConfigurationError(f"max_degree must be non-negative, got {max_degree}")
    if family not in ("sw", "qlaguerre"):
        raise ConfigurationError(f"unknown orthogonal family: {family}")
    if family == "qlaguerre" and alpha is None:
        raise ConfigurationError("the q-Laguerre family needs alpha")

    mp = ctx.mp
    qp = QPoint.from_q(q, ctx)
    degrees = range(max_degree + 1)
    tolerance = orthogonality_tolerance(ctx)

    def log_weight(x: Any) -> tuple[Any, int]:
        if family == "sw":
            return log_weight_sw(x, qp, ctx), 1
        return log_weight_qlaguerre(x, alpha, qp, ctx)

    def polynomials(x: Any) -> list[Any]:
        if family == "sw":
            values = [stieltjes_wigert(x, n, qp, ctx) for n in degrees]
        else:
            values = [q_laguerre(x, PolynomialSpec(n=n, alpha=alpha), qp, ctx) for n in degrees]
        return [mp.re(logc_to_complex(v, ctx)) for v in values]

    # keyed by node; every entry's quad call visits the same nodes
    cache: dict[Any, tuple[Any, list[Any]]] = {}

    def point(t: Any) -> tuple[Any, list[Any]]:
        if t not in cache:
            x = mp.exp(t)
            log_w, sign = log_weight(x)
            cache[t] = (sign * mp.exp(log_w + t), polynomials(x))
        return cache[t]

    def entry(m: int, n: int) -> Callable[[Any], Any]:
        def integrand(t: Any) -> Any:
            scale, values = point(t)
            return scale * values[m] * values[n]

        return integrand

    def log_envelope(t: Any) -> Any:
        x = mp.exp(t)
        sizes = [abs(v) for v in polynomials(x)]
        return log_weight(x)[0] + t + 2 * mp.log(max(sizes))

    lo, hi = _scan_window(log_envelope, ctx)
    panels = list(range(lo, hi, PANEL_WIDTH)) + [hi]
    gram = [[mp.zero] * len(degrees) for _ in degrees]
    worst_error = mp.zero
    for m in degrees:
        for n in range(m, max_degree + 1):
            value, error = mp.quad(
                entry(m, n), panels, error=True, maxdegree=config.quadrature_max_level
            )
            gram[m][n] = gram[n][m] = value
            worst_error = max(worst_error, error / max(abs(value), mp.one))
    if worst_error > mp.sqrt(ctx.tolerance):
        logger.warning(
            f"quadrature error estimate {float(worst_error):.3e} above the settling threshold "
            f"at level {config.quadrature_max_level}"
        )
    logger.debug(f"{family} Gram matrix from {len(cache)} integrand points")

    if family == "sw":
        targets = [1 / (qp.power(n) * qpoch_finite(qp.q, qp, n, ctx)) for n in degrees]
    else:
        targets = [
            qpoch_finite(qp.power(alpha + 1), qp, n, ctx)
            / (qp.power(n) * qpoch_finite(qp.q, qp, n, ctx))
            for n in degrees
        ]

    diagonal_error = max(abs(gram[n][n] / targets[n] - 1) for n in degrees)
    off_ratios = [
        abs(gram[m][n]) / mp.sqrt(abs(targets[m] * targets[n]))
        for m in degrees
        for n in degrees
        if m != n
    ]
    offdiagonal = max(off_ratios) if off_ratios else mp.zero
    return OrthogonalityResult(
        family=family,
        q=float(q),
        alpha=alpha,
        max_degree=max_degree,
        gram=[[float(v) for v in row] for row in gram],
        target_diagonal=[float(v) for v in targets],
        max_diagonal_rel_error=float(diagonal_error),
        max_offdiagonal_ratio=float(offdiagonal),
        tolerance=tolerance,
        passed=bool(diagonal_error <= tolerance and offdiagonal <= tolerance),
    )
