"""Validated nome and modular-argument points."""

from dataclasses import dataclass
from typing import Any

from .exceptions import DomainError
from .numerics import PrecisionContext, resolve_context


@dataclass(frozen=True)
class QPoint:
    """A nome q in (0, 1) with its logarithm and the tau satisfying q = e^{pi i tau}."""

    q: Any
    log_q: Any
    tau: Any
    ctx: PrecisionContext

    @classmethod
    def from_q(cls, q: Any, ctx: PrecisionContext | None = None) -> "QPoint":
        """
        Build a point from the nome itself.

        Args:
            q: Real nome in the open interval (0, 1)
            ctx: Precision context

        Returns:
            Validated QPoint

        Raises:
            DomainError: If q is not in (0, 1)
        """
        ctx = resolve_context(ctx)
        mp = ctx.mp
        value = mp.mpf(q)
        if not 0 < value < 1:
            raise DomainError(f"nome must lie in (0, 1), got {q}")
        return cls._build(value, mp.log(value), ctx)

    @classmethod
    def from_log_q(cls, log_q: Any, ctx: PrecisionContext | None = None) -> "QPoint":
        """Build a point from ln q, which must be negative."""
        ctx = resolve_context(ctx)
        mp = ctx.mp
        log_value = mp.mpf(log_q)
        if not log_value < 0 or mp.isinf(log_value):
            raise DomainError(f"log of the nome must be finite and negative, got {log_q}")
        return cls._build(mp.exp(log_value), log_value, ctx)

    @classmethod
    def from_tau(cls, tau: Any, ctx: PrecisionContext | None = None) -> "QPoint":
        """Build a point from a purely imaginary tau with positive imaginary part."""
        ctx = resolve_context(ctx)
        mp = ctx.mp
        tau = mp.mpc(tau)
        if tau.real != 0 or tau.imag <= 0:
            raise DomainError(f"tau must be on the positive imaginary axis, got {tau}")
        return cls.from_log_q(-mp.pi * tau.imag, ctx)

    @classmethod
    def _build(cls, q: Any, log_q: Any, ctx: PrecisionContext) -> "QPoint":
        mp = ctx.mp
        return cls(q=q, log_q=log_q, tau=mp.mpc(0, -log_q / mp.pi), ctx=ctx)

    def power(self, x: Any) -> Any:
        """Return q**x; integer exponents are exact products."""
        if isinstance(x, int):
            return self.q**x
        return self.ctx.mp.exp(self.ctx.mp.mpf(x) * self.log_q)

    def squared(self) -> "QPoint":
        """The point for q**2."""
        return QPoint.from_log_q(2 * self.log_q, self.ctx)

    def with_context(self, ctx: PrecisionContext) -> "QPoint":
        """Rebuild the point under another precision context."""
        return QPoint.from_q(self.q, ctx)


@dataclass(frozen=True)
class ModularPoint:
    """Argument v and modular parameter tau (z = e^{2 pi i v}, q = e^{pi i tau})."""

    v: Any
    tau: Any

    @classmethod
    def create(cls, v: Any, tau: Any, ctx: PrecisionContext | None = None) -> "ModularPoint":
        """
        Build a validated point.

        Args:
            v: Complex argument
            tau: Complex modular parameter with Im(tau) > 0
            ctx: Precision context

        Returns:
            ModularPoint holding mpmath complex values

        Raises:
            DomainError: If Im(tau) <= 0
        """
        mp = resolve_context(ctx).mp
        tau = mp.mpc(tau)
        if tau.imag <= 0:
            raise DomainError(f"Im(tau) must be positive, got {tau}")
        return cls(v=mp.mpc(v), tau=tau)

    @classmethod
    def from_nome(cls, v: Any, qp: QPoint) -> "ModularPoint":
        """Build a point from a real nome."""
        return cls(v=qp.ctx.mp.mpc(v), tau=qp.tau)
