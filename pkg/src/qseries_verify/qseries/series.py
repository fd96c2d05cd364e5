"""Power series in the nome with certified truncation."""

from collections.abc import Callable
from typing import Any

from ..core.exceptions import DomainError, ResourceError
from ..core.nome import QPoint
from ..core.numerics import PrecisionContext, resolve_context
from ..utils.logger import get_logger

logger = get_logger(__name__)


def certified_sum(
    first: Any,
    ratio: Callable[[int], Any],
    majorant: Callable[[int], Any],
    ctx: PrecisionContext,
    label: str = "series",
) -> Any:
    """
    Sum t_0 + t_1 + ... with t_{k+1} = t_k * ratio(k).

    ``majorant(k)`` must bound |ratio(j)| for every j >= k and be non-increasing in k.
    Summation stops after t_k once majorant(k) < 1 and the geometric tail
    |t_k| rho / (1 - rho) is below eps times the largest term seen, so the
    truncation error never exceeds the rounding already present in the sum.

    Args:
        first: Term t_0
        ratio: Term ratio t_{k+1} / t_k
        majorant: Non-increasing bound on |ratio(j)|, j >= k
        ctx: Precision context
        label: Series name for log and error messages

    Returns:
        The truncated sum, accumulated with mpmath.fsum

    Raises:
        ResourceError: If more than ctx.max_terms terms are needed
    """
    mp = ctx.mp
    eps = ctx.eps
    terms = [mp.mpmathify(first)]
    largest = abs(terms[0])
    k = 0
    while True:
        term = terms[-1]
        if term == 0 and k > 0:
            break
        rho = majorant(k)
        if rho < 1 and abs(term) * rho / (1 - rho) <= eps * largest:
            break
        if k + 1 > ctx.max_terms:
            raise ResourceError(
                f"{label} did not converge within {ctx.max_terms} terms",
                required_terms=k + 1,
            )
        term = term * ratio(k)
        terms.append(term)
        largest = max(largest, abs(term))
        k += 1
    logger.debug(f"{label} summed {len(terms)} terms")
    return mp.fsum(terms)


def qbinomial_series(
    a: Any, z: Any, qp: QPoint, ctx: PrecisionContext | None = None
) -> Any:
    """
    The q-binomial series sum_k (a;q)_k / (q;q)_k z^k.

    Equals (az;q)_inf / (z;q)_inf inside the unit disc.

    Args:
        a: Numerator parameter
        z: Argument with |z| < 1
        qp: Nome
        ctx: Precision context

    Returns:
        The series value

    Raises:
        DomainError: If |z| >= 1
        ResourceError: If the term cap is exceeded
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    a = mp.mpmathify(a)
    z = mp.mpmathify(z)
    if abs(z) >= 1:
        raise DomainError(f"q-binomial series needs |z| < 1, got |z| = {float(abs(z)):.6g}")
    q = qp.q
    abs_a = abs(a)
    abs_z = abs(z)

    def ratio(k: int) -> Any:
        qk = q**k
        return (1 - a * qk) * z / (1 - qk * q)

    def majorant(k: int) -> Any:
        qk = q**k
        return (1 + abs_a * qk) * abs_z / (1 - qk * q)

    return certified_sum(mp.one, ratio, majorant, ctx, "q-binomial series")


def euler_series(z: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> Any:
    """
    Euler's series sum_k q^{k(k-1)/2} (-z)^k / (q;q)_k, which equals (z;q)_inf.

    Args:
        z: Any complex argument
        qp: Nome
        ctx: Precision context

    Returns:
        The series value

    Raises:
        ResourceError: If the term cap is exceeded
    """
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    z = mp.mpmathify(z)
    q = qp.q
    abs_z = abs(z)

    def ratio(k: int) -> Any:
        qk = q**k
        return -z * qk / (1 - qk * q)

    def majorant(k: int) -> Any:
        qk = q**k
        return abs_z * qk / (1 - qk * q)

    return certified_sum(mp.one, ratio, majorant, ctx, "Euler series")
