"""Precision contexts and log-domain complex values.

Every evaluation in the package runs under a :class:`PrecisionContext`, which owns a
private mpmath context so that evaluations never touch the global ``mpmath.mp``
state. Values whose magnitude reaches e^{7000} and beyond are carried as
:class:`LogComplex` (natural log of the modulus plus a phase in (-pi, pi]).
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from mpmath import MPContext
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .config import Config, get_config
from .exceptions import DomainError, SingularityError


class PrecisionContext(BaseModel):
    """Working precision and truncation policy governing an evaluation."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "precision_bits": 256,
                "guard_bits": 32,
                "max_terms": 100000,
            }
        },
    )

    precision_bits: int = Field(256, ge=64, description="Working mantissa bits")
    guard_bits: int = Field(32, ge=16, description="Extra bits for truncation decisions")
    max_terms: int = Field(
        100_000, ge=1024, description="Hard cap on series and product length"
    )

    _mp: Any = PrivateAttr(default=None)

    def model_post_init(self, context: Any) -> None:
        """Attach a private mpmath context running at precision + guard bits."""
        mp = MPContext()
        mp.prec = self.precision_bits + self.guard_bits
        self._mp = mp

    @property
    def mp(self) -> Any:
        """The mpmath context owned by this precision context."""
        return self._mp

    @property
    def working_bits(self) -> int:
        """Mantissa width used for arithmetic."""
        return self.precision_bits + self.guard_bits

    @property
    def eps(self) -> Any:
        """Truncation threshold 2^-(precision_bits + guard_bits)."""
        return self._mp.ldexp(self._mp.one, -self.working_bits)

    @property
    def tolerance(self) -> Any:
        """Target relative accuracy 2^-precision_bits."""
        return self._mp.ldexp(self._mp.one, -self.precision_bits)

    def with_precision(self, precision_bits: int) -> "PrecisionContext":
        """Return a context with a different mantissa width and the same policy."""
        return PrecisionContext(
            precision_bits=precision_bits,
            guard_bits=self.guard_bits,
            max_terms=self.max_terms,
        )

    def doubled(self) -> "PrecisionContext":
        """Return a context at twice the mantissa width (oracle evaluations)."""
        return self.with_precision(2 * self.precision_bits)

    @classmethod
    def from_config(cls, config: Config | None = None) -> "PrecisionContext":
        """
        Build a context from application configuration.

        Args:
            config: Configuration to read; the global one when omitted

        Returns:
            PrecisionContext with the configured widths and term cap
        """
        config = config or get_config()
        return cls(
            precision_bits=config.precision_bits,
            guard_bits=config.guard_bits,
            max_terms=config.max_terms,
        )


@lru_cache(maxsize=1)
def default_context() -> PrecisionContext:
    """
    Context used when an operation is called without one.

    The returned context is shared; concurrent workers must build their own.
    """
    return PrecisionContext.from_config()


def resolve_context(
    ctx: PrecisionContext | None, fallback: PrecisionContext | None = None
) -> PrecisionContext:
    """Return ``ctx``, else ``fallback``, else the shared default context."""
    if ctx is not None:
        return ctx
    return fallback if fallback is not None else default_context()


@dataclass(frozen=True)
class LogComplex:
    """A complex value stored as (log-magnitude, phase).

    ``log_mag`` is the natural log of the modulus, ``-inf`` for zero. ``phase`` lies
    in (-pi, pi] and is kept as a high-precision real so sign factors stay exact.
    """

    log_mag: Any
    phase: Any

    @property
    def is_zero(self) -> bool:
        """True when the value encodes zero."""
        return bool(self.log_mag == float("-inf"))

    def to_floats(self) -> tuple[float, float]:
        """Log-magnitude and phase as floats (report serialization)."""
        return float(self.log_mag), float(self.phase)


def wrap_phase(phase: Any, ctx: PrecisionContext | None = None) -> Any:
    """
    Wrap a real angle into (-pi, pi].

    Args:
        phase: Angle in radians
        ctx: Precision context

    Returns:
        Equivalent angle in (-pi, pi]
    """
    mp = resolve_context(ctx).mp
    phase = mp.mpf(phase)
    if -mp.pi < phase <= mp.pi:
        return phase
    turns = mp.ceil((phase - mp.pi) / (2 * mp.pi))
    return phase - 2 * mp.pi * turns


def logc(log_mag: Any, phase: Any = 0, ctx: PrecisionContext | None = None) -> LogComplex:
    """Build a LogComplex from raw parts, wrapping the phase."""
    mp = resolve_context(ctx).mp
    log_mag = mp.mpf(log_mag)
    if log_mag == mp.ninf:
        return LogComplex(mp.ninf, mp.zero)
    return LogComplex(log_mag, wrap_phase(phase, ctx))


def logc_zero(ctx: PrecisionContext | None = None) -> LogComplex:
    """The encoding of zero."""
    mp = resolve_context(ctx).mp
    return LogComplex(mp.ninf, mp.zero)


def logc_from_complex(z: Any, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Convert an ordinary (or mpmath) complex value to log-domain form.

    Args:
        z: Complex value
        ctx: Precision context

    Returns:
        LogComplex with log_mag = ln|z| and phase = arg z; zero maps to log_mag -inf
    """
    mp = resolve_context(ctx).mp
    z = mp.mpc(z)
    if z == 0:
        return logc_zero(ctx)
    if z.imag == 0:
        return LogComplex(mp.log(abs(z.real)), mp.zero if z.real > 0 else +mp.pi)
    return LogComplex(mp.log(abs(z)), wrap_phase(mp.arg(z), ctx))


def logc_to_complex(a: LogComplex, ctx: PrecisionContext | None = None) -> Any:
    """
    Convert back to an mpmath number.

    Real values (phase 0 or pi) come back as real ``mpf``.
    """
    mp = resolve_context(ctx).mp
    if a.is_zero:
        return mp.zero
    modulus = mp.exp(a.log_mag)
    if a.phase == 0:
        return modulus
    if a.phase == mp.pi:
        return -modulus
    return modulus * mp.expj(a.phase)


def logc_mul(a: LogComplex, b: LogComplex, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Multiply two log-domain values.

    Args:
        a: First factor
        b: Second factor
        ctx: Precision context

    Returns:
        Product with log_mag = a.log_mag + b.log_mag and wrapped phase
    """
    if a.is_zero or b.is_zero:
        return logc_zero(ctx)
    return logc(a.log_mag + b.log_mag, a.phase + b.phase, ctx)


def logc_prod(factors: Iterable[LogComplex], ctx: PrecisionContext | None = None) -> LogComplex:
    """Product of several log-domain values."""
    mp = resolve_context(ctx).mp
    result = LogComplex(mp.zero, mp.zero)
    for factor in factors:
        result = logc_mul(result, factor, ctx)
    return result


def logc_div(a: LogComplex, b: LogComplex, ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Divide two log-domain values.

    Raises:
        SingularityError: If the divisor is zero
    """
    if b.is_zero:
        raise SingularityError("division by a zero log-domain value")
    if a.is_zero:
        return logc_zero(ctx)
    return logc(a.log_mag - b.log_mag, a.phase - b.phase, ctx)


def logc_pow_real(a: LogComplex, s: Any, ctx: PrecisionContext | None = None) -> LogComplex:
    """Principal power a**s for real s."""
    mp = resolve_context(ctx).mp
    s = mp.mpf(s)
    if a.is_zero:
        if s > 0:
            return logc_zero(ctx)
        raise SingularityError(f"zero raised to non-positive power {s}")
    return logc(s * a.log_mag, s * a.phase, ctx)


def logc_sum(terms: Iterable[LogComplex], ctx: PrecisionContext | None = None) -> LogComplex:
    """
    Sum log-domain values by factoring out the largest modulus.

    Args:
        terms: Values to add
        ctx: Precision context

    Returns:
        The sum in log-domain form
    """
    mp = resolve_context(ctx).mp
    nonzero = [t for t in terms if not t.is_zero]
    if not nonzero:
        return logc_zero(ctx)
    peak = max(t.log_mag for t in nonzero)
    scaled = mp.fsum(mp.exp(t.log_mag - peak) * mp.expj(t.phase) for t in nonzero)
    total = logc_from_complex(scaled, ctx)
    if total.is_zero:
        return total
    return LogComplex(total.log_mag + peak, total.phase)


def logc_rel_dev(a: LogComplex, b: LogComplex, ctx: PrecisionContext | None = None) -> Any:
    """
    Relative deviation |a/b - 1| computed without leaving the log domain.

    Args:
        a: Measured value
        b: Reference value
        ctx: Precision context

    Returns:
        Non-negative real; exactly zero when a and b coincide

    Raises:
        DomainError: If b is zero
    """
    mp = resolve_context(ctx).mp
    if b.is_zero:
        raise DomainError("relative deviation against a zero reference")
    if a.is_zero:
        return mp.one
    exponent = mp.mpc(a.log_mag - b.log_mag, a.phase - b.phase)
    return abs(mp.expm1(exponent))
