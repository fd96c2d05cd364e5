"""q-shifted factorials and the certified remainders of their tails."""

from typing import Any

from ..core.exceptions import DomainError, ResourceError, SingularityError
from ..core.nome import QPoint
from ..core.numerics import PrecisionContext, resolve_context
from ..models.results import RemainderReport
from ..utils.logger import get_logger

logger = get_logger(__name__)


def qpoch_finite(a: Any, qp: QPoint, n: int, ctx: PrecisionContext | None = None) -> Any:
    """
    Finite q-shifted factorial (a; q)_n = prod_{k<n} (1 - a q^k).

    Args:
        a: Real or complex base
        qp: Nome
        n: Number of factors (0 gives the empty product)
        ctx: Precision context

    Returns:
        The product as an mpmath number
    """
    if n < 0:
        raise DomainError(f"number of factors must be non-negative, got {n}")
    mp = resolve_context(ctx, qp.ctx).mp
    a = mp.mpmathify(a)
    result = mp.one
    qk = mp.one
    for _ in range(n):
        result *= 1 - a * qk
        qk *= qp.q
    return result


def truncation_index(abs_a: Any, abs_q: Any, ctx: PrecisionContext) -> int:
    """
    Number of factors after which |a| |q|^K < eps (1 - |q|).

    The tail (a q^K; q)_inf then differs from 1 by at most 2 eps.

    Raises:
        ResourceError: If the index exceeds ctx.max_terms
    """
    mp = ctx.mp
    if abs_a == 0:
        return 0
    threshold = ctx.eps * (1 - abs_q)
    count = int(mp.ceil((mp.log(abs_a) - mp.log(threshold)) / -mp.log(abs_q)))
    count = max(count, 0)
    if count > ctx.max_terms:
        raise ResourceError(
            f"infinite product needs {count} factors, cap is {ctx.max_terms}",
            required_terms=count,
        )
    return count


def qpoch_nome(a: Any, q: Any, ctx: PrecisionContext) -> Any:
    """
    Infinite product (a; q)_inf for any nome with |q| < 1, real or complex.

    Exact zero factors give exactly zero. A factor smaller than 2^-precision_bits
    is treated as zero and logged, since its value is not resolved at working
    precision.
    """
    mp = ctx.mp
    a = mp.mpmathify(a)
    q = mp.mpmathify(q)
    if a == 0:
        return mp.one
    count = truncation_index(abs(a), abs(q), ctx)
    logger.debug(f"product (a;q)_inf truncated after {count} factors")
    tolerance = ctx.tolerance
    result = mp.one
    aqk = a
    for k in range(count):
        factor = 1 - aqk
        if factor == 0:
            return mp.zero
        if abs(factor) < tolerance:
            logger.warning(f"factor {k} of (a;q)_inf is below 2^-{ctx.precision_bits}; returning 0")
            return mp.zero
        result *= factor
        aqk *= q
    return result


def qpoch_infinite(a: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> Any:
    """
    Infinite q-shifted factorial (a; q)_inf.

    Args:
        a: Real or complex base
        qp: Nome
        ctx: Precision context

    Returns:
        The product truncated once the remaining tail is within 2 eps of 1

    Raises:
        ResourceError: If the truncation index exceeds the term cap
    """
    return qpoch_nome(a, qp.q, resolve_context(ctx, qp.ctx))


def remainder_bound(a: Any, qp: QPoint, n: int, ctx: PrecisionContext) -> Any:
    """The tail bound 2 |a| q^n / (1 - q)."""
    mp = ctx.mp
    return 2 * abs(mp.mpmathify(a)) * qp.power(n) / (1 - qp.q)


def _check_remainder_gate(a: Any, qp: QPoint, n: int, ctx: PrecisionContext) -> None:
    if n < 1:
        raise DomainError(f"remainder index must be positive, got {n}")
    gate = abs(ctx.mp.mpmathify(a)) * qp.power(n) / (1 - qp.q)
    if not gate < 0.5:
        raise DomainError(f"remainder needs |a| q^n / (1 - q) < 1/2, got {float(gate):.6g}")


def _report(
    a: Any, qp: QPoint, n: int, kind: str, value: Any, ctx: PrecisionContext
) -> RemainderReport:
    mp = ctx.mp
    bound = remainder_bound(a, qp, n, ctx)
    value = mp.mpc(value)
    return RemainderReport(
        kind=kind,
        a=complex(mp.mpc(a)),
        q=float(qp.q),
        n=n,
        value=complex(value),
        bound=float(bound),
        ratio=float(abs(value) / bound) if bound > 0 else 0.0,
        satisfied=bool(abs(value) <= bound),
    )


def remainder_r1(
    a: Any, qp: QPoint, n: int, ctx: PrecisionContext | None = None
) -> RemainderReport:
    """
    First tail remainder r1(a; n) = (a q^n; q)_inf - 1 with its bound.

    Raises:
        DomainError: If |a| q^n / (1 - q) < 1/2 fails
    """
    ctx = resolve_context(ctx, qp.ctx)
    _check_remainder_gate(a, qp, n, ctx)
    shifted = ctx.mp.mpmathify(a) * qp.power(n)
    value = qpoch_infinite(shifted, qp, ctx) - 1
    return _report(a, qp, n, "r1", value, ctx)


def remainder_r2(
    a: Any, qp: QPoint, n: int, ctx: PrecisionContext | None = None
) -> RemainderReport:
    """
    Second tail remainder r2(a; n) = 1 / (a q^n; q)_inf - 1 with its bound.

    Raises:
        DomainError: If |a| q^n / (1 - q) < 1/2 fails
        SingularityError: If (a q^n; q)_inf vanishes
    """
    ctx = resolve_context(ctx, qp.ctx)
    _check_remainder_gate(a, qp, n, ctx)
    shifted = ctx.mp.mpmathify(a) * qp.power(n)
    product = qpoch_infinite(shifted, qp, ctx)
    if product == 0:
        raise SingularityError("(a q^n; q)_inf vanishes")
    value = 1 / product - 1
    return _report(a, qp, n, "r2", value, ctx)


def smallest_certified_index(a: Any, qp: QPoint, ctx: PrecisionContext | None = None) -> int:
    """Smallest n >= 1 with |a| q^n / (1 - q) < 1/2."""
    ctx = resolve_context(ctx, qp.ctx)
    mp = ctx.mp
    size = abs(mp.mpmathify(a))
    if size == 0:
        return 1
    n = int(mp.floor(mp.log(2 * size / (1 - qp.q)) / -qp.log_q))
    n = max(n, 1)
    while not size * qp.power(n) / (1 - qp.q) < 0.5:
        n += 1
    return n


def chi(n: int) -> int:
    """
    Parity indicator n - 2 floor(n/2).

    Raises:
        DomainError: If n < 1
    """
    if n < 1:
        raise DomainError(f"parity index must be positive, got {n}")
    return n - 2 * (n // 2)
