"""Closed-form main terms of the scaled limits and their comparison with direct evaluation.

Every formula is stated at N = n^a, eps = n^-a with the nome q = exp(-c pi eps),
c = 2 or 1 by the formula's nome rule. A main term is split into a positive
prefactor (with any sign or phase) times an optional cosine factor, so that near
the cosine's zeros the comparison can turn absolute.
"""

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..core.config import get_config
from ..core.exceptions import ConfigurationError, DomainError
from ..core.nome import QPoint
from ..core.numerics import (
    LogComplex,
    PrecisionContext,
    logc,
    logc_div,
    logc_from_complex,
    logc_mul,
    logc_rel_dev,
    logc_to_complex,
    resolve_context,
)
from ..functions.polynomials import (
    orthonormal_qlaguerre,
    orthonormal_sw,
    q_laguerre,
    stieltjes_wigert,
)
from ..functions.qfunctions import euler_Eq, jackson_J2, q_gamma, ramanujan_Aq
from ..models.params import PolynomialSpec, ScaledFormula, ScaledRegime
from ..models.results import AsymptoticComparison, RateFitReport
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class _Parts:
    """Direct value and main term (prefactor times optional cosine) of one formula."""

    direct: LogComplex | None
    prefactor: LogComplex
    cosine: Any | None


def _check_regime(formula: ScaledFormula, regime: ScaledRegime) -> None:
    if regime.nome_rule is not formula.nome_rule:
        raise ConfigurationError(
            f"{formula.value} is stated under the {formula.nome_rule.value} nome rule, "
            f"got {regime.nome_rule.value}"
        )
    required = formula.requires
    if required is not None and getattr(regime, required) is None:
        raise ConfigurationError(f"{formula.value} needs {required}")


class _Scale:
    """Shared quantities of one regime at working precision."""

    def __init__(self, regime: ScaledRegime, ctx: PrecisionContext, evaluate: bool) -> None:
        mp = ctx.mp
        self.ctx = ctx
        self.evaluate = evaluate
        self.mp = mp
        self.n = regime.n
        self.u = mp.mpf(regime.u)
        self.big = mp.power(regime.n, mp.mpf(regime.a_exp))
        self.eps = 1 / self.big
        self.rest = regime.n * self.eps  # n^{1-a}
        self.shift = self.big * self.u + regime.n  # n^a u + n
        self.sign_pi = mp.pi if regime.n % 2 else mp.zero
        self.qp = QPoint.from_log_q(-regime.nome_rule.coefficient * mp.pi * self.eps, ctx)

    def log(self, log_mag: Any, phase: Any = 0) -> LogComplex:
        return logc(log_mag, phase, self.ctx)

    def direct(self, evaluation: Callable[[], LogComplex]) -> LogComplex | None:
        """Run the direct evaluation unless only the main term is wanted."""
        return evaluation() if self.evaluate else None


def _euler(s: _Scale, regime: ScaledRegime, negative: bool) -> _Parts:
    mp = s.mp
    argument = mp.exp(2 * mp.pi * (s.u + s.rest - s.eps / 2))
    direct = s.direct(lambda: euler_Eq(-argument if negative else argument, s.qp, s.ctx))
    gauss = mp.pi * s.eps * s.shift**2
    if not negative:
        return _Parts(direct, s.log(gauss + mp.pi / 12 * (s.big - s.eps)), None)
    prefactor = s.log(mp.log(2) + gauss - mp.pi / 12 * (2 * s.big + s.eps), s.sign_pi)
    return _Parts(direct, prefactor, mp.cospi(s.big * s.u))


def _qgamma(s: _Scale, regime: ScaledRegime, reflected: bool) -> _Parts:
    mp = s.mp
    one = s.log(0)
    half = mp.mpf(1) / 2
    x = half - s.shift if reflected else half + s.shift
    direct = s.direct(lambda: logc_div(one, q_gamma(x, s.qp, s.ctx), s.ctx))
    log_gap = mp.log(-mp.expm1(-2 * mp.pi * s.eps))  # ln(1 - e^{-2 pi eps})
    if reflected:
        log_mag = (
            mp.log(2)
            + mp.pi * s.eps * s.shift**2
            - mp.log(s.big) / 2
            - mp.pi * s.big / 12
            - mp.pi * s.eps / 6
            - (s.shift + half) * log_gap
        )
        return _Parts(direct, s.log(log_mag, s.sign_pi), mp.cospi(s.big * s.u))
    log_mag = (
        mp.pi * s.big / 12
        - mp.pi * s.eps / 12
        - mp.log(s.big) / 2
        - (half - s.shift) * log_gap
    )
    return _Parts(direct, s.log(log_mag), None)


def _ramanujan(s: _Scale, regime: ScaledRegime, negative: bool) -> _Parts:
    mp = s.mp
    argument = mp.exp(2 * mp.pi * (s.u + s.rest))
    direct = s.direct(lambda: ramanujan_Aq(-argument if negative else argument, s.qp, s.ctx))
    gauss = mp.pi * s.eps * s.shift**2
    if negative:
        log_mag = gauss - mp.log(2) / 2 - mp.pi * s.eps / 24 + mp.pi * s.big / 6
        return _Parts(direct, s.log(log_mag), None)
    log_mag = gauss + mp.log(2) / 2 - mp.pi * (s.big / 12 + s.eps / 24)
    return _Parts(direct, s.log(log_mag, s.sign_pi), mp.cospi(s.big * s.u))


def _bessel(s: _Scale, regime: ScaledRegime, imaginary: bool) -> _Parts:
    mp = s.mp
    nu = mp.mpf(regime.nu)
    radius = 2 * mp.exp(mp.pi * (s.u + s.rest + nu * s.eps / 2))
    argument = mp.mpc(0, radius) if imaginary else radius
    direct = s.direct(lambda: jackson_J2(argument, nu, s.qp, s.ctx))
    gauss = mp.pi * s.eps * (s.shift + nu / 2) ** 2
    if imaginary:
        log_mag = (
            gauss
            - mp.log(2)
            - mp.log(s.big) / 2
            - mp.pi * (s.eps / 12 - s.big / 3 - s.eps * nu * nu / 4)
        )
        return _Parts(direct, s.log(log_mag, mp.pi * nu / 2), None)
    log_mag = gauss - mp.log(s.big) / 2 - mp.pi * (s.eps / 12 - s.big / 12 - nu * nu * s.eps / 4)
    return _Parts(direct, s.log(log_mag, s.sign_pi), mp.cospi(s.big * s.u))


def _polynomial_main(s: _Scale, direct: LogComplex | None, negative: bool) -> _Parts:
    mp = s.mp
    gauss = mp.pi * s.eps * s.shift**2 / 2
    if negative:
        log_mag = gauss - mp.log(2 * s.big) / 2 - mp.pi * s.eps / 6 + mp.pi * s.big / 6
        return _Parts(direct, s.log(log_mag), None)
    log_mag = mp.log(2 / s.big) / 2 + gauss - mp.pi * s.eps / 6 + mp.pi * s.big / 24
    return _Parts(direct, s.log(log_mag), mp.cospi(s.shift / 2))


def _stieltjes_wigert(s: _Scale, regime: ScaledRegime, negative: bool) -> _Parts:
    mp = s.mp
    argument = mp.exp(2 * mp.pi * s.eps * s.shift)
    direct = s.direct(
        lambda: stieltjes_wigert(-argument if negative else argument, s.n, s.qp, s.ctx)
    )
    return _polynomial_main(s, direct, negative)


def _laguerre(s: _Scale, regime: ScaledRegime, negative: bool) -> _Parts:
    mp = s.mp
    alpha = mp.mpf(regime.alpha)
    argument = mp.exp(2 * mp.pi * (s.u + s.rest + alpha * s.eps))
    spec = PolynomialSpec(n=s.n, alpha=regime.alpha)
    direct = s.direct(lambda: q_laguerre(-argument if negative else argument, spec, s.qp, s.ctx))
    return _polynomial_main(s, direct, negative)


def _sw_orthonormal(s: _Scale, regime: ScaledRegime) -> _Parts:
    mp = s.mp
    argument = mp.exp(2 * mp.pi * s.eps * s.shift)
    direct = s.direct(lambda: orthonormal_sw(argument, s.n, s.qp, s.ctx))
    log_mag = -mp.pi * s.u / 2 - mp.log(mp.pi) / 2 - 3 * mp.pi * s.rest / 2 - mp.pi * s.eps / 4
    return _Parts(direct, s.log(log_mag), mp.cospi(s.shift / 2))


def _laguerre_orthonormal(s: _Scale, regime: ScaledRegime) -> _Parts:
    mp = s.mp
    alpha = mp.mpf(regime.alpha)
    argument = mp.exp(2 * mp.pi * (s.u + s.rest + alpha * s.eps))
    spec = PolynomialSpec(n=s.n, alpha=regime.alpha)
    direct = s.direct(lambda: orthonormal_qlaguerre(argument, spec, s.qp, s.ctx))
    log_mag = (
        -mp.pi * s.u / 2
        - mp.log(mp.pi) / 2
        - mp.pi / 2 * (3 * s.rest + 2 * alpha * s.eps + s.eps / 2)
    )
    return _Parts(direct, s.log(log_mag), mp.cospi(s.shift / 2))


_BUILDERS: dict[ScaledFormula, Callable[[_Scale, ScaledRegime], _Parts]] = {
    ScaledFormula.EULER_POSITIVE: lambda s, r: _euler(s, r, negative=False),
    ScaledFormula.EULER_NEGATIVE: lambda s, r: _euler(s, r, negative=True),
    ScaledFormula.QGAMMA_REFLECTED: lambda s, r: _qgamma(s, r, reflected=True),
    ScaledFormula.QGAMMA_SHIFTED: lambda s, r: _qgamma(s, r, reflected=False),
    ScaledFormula.RAMANUJAN_NEGATIVE: lambda s, r: _ramanujan(s, r, negative=True),
    ScaledFormula.RAMANUJAN_POSITIVE: lambda s, r: _ramanujan(s, r, negative=False),
    ScaledFormula.BESSEL_IMAGINARY: lambda s, r: _bessel(s, r, imaginary=True),
    ScaledFormula.BESSEL_REAL: lambda s, r: _bessel(s, r, imaginary=False),
    ScaledFormula.SW_NEGATIVE: lambda s, r: _stieltjes_wigert(s, r, negative=True),
    ScaledFormula.SW_POSITIVE: lambda s, r: _stieltjes_wigert(s, r, negative=False),
    ScaledFormula.SW_ORTHONORMAL: _sw_orthonormal,
    ScaledFormula.LAGUERRE_NEGATIVE: lambda s, r: _laguerre(s, r, negative=True),
    ScaledFormula.LAGUERRE_POSITIVE: lambda s, r: _laguerre(s, r, negative=False),
    ScaledFormula.LAGUERRE_ORTHONORMAL: _laguerre_orthonormal,
}


def _main_from_parts(parts: _Parts, ctx: PrecisionContext) -> LogComplex:
    if parts.cosine is None:
        return parts.prefactor
    return logc_mul(parts.prefactor, logc_from_complex(parts.cosine, ctx), ctx)


def _closed_form(
    formula: ScaledFormula, regime: ScaledRegime, ctx: PrecisionContext, evaluate: bool
) -> tuple[_Scale, _Parts]:
    _check_regime(formula, regime)
    scale = _Scale(regime, ctx, evaluate)
    return scale, _BUILDERS[formula](scale, regime)


def main_term(
    formula: ScaledFormula, regime: ScaledRegime, ctx: PrecisionContext | None = None
) -> LogComplex:
    """
    Closed-form main term of ``formula`` in the log domain.

    Sign factors (-1)^n, cosine factors and i^nu are included.

    Raises:
        ConfigurationError: If the regime's nome rule does not match the formula
            or nu/alpha is missing
    """
    ctx = resolve_context(ctx)
    _, parts = _closed_form(formula, regime, ctx, evaluate=False)
    return _main_from_parts(parts, ctx)


def compare_asymptotic(
    formula: ScaledFormula,
    regime: ScaledRegime,
    ctx: PrecisionContext | None = None,
    oscillation_floor: float | None = None,
    envelope_factor: float | None = None,
) -> AsymptoticComparison:
    """
    Evaluate the function at the formula's scaled argument and compare with the main term.

    Where |cos| <= oscillation_floor the comparison is absolute:
    |direct / prefactor - cos|. Otherwise rel_dev = |direct / main - 1|.

    Args:
        formula: Scaled formula
        regime: n, a, u and the formula's extra parameters
        ctx: Precision context
        oscillation_floor: Cosine level below which the comparison turns absolute
        envelope_factor: Constant applied to exp(-stated_rate) in the pass flag

    Returns:
        AsymptoticComparison with the measured deviation and pass flag

    Raises:
        ConfigurationError: If the regime does not fit the formula
        ResourceError: If the direct evaluation exceeds the term cap
    """
    ctx = resolve_context(ctx)
    config = get_config()
    if oscillation_floor is None:
        oscillation_floor = config.oscillation_floor
    if envelope_factor is None:
        envelope_factor = config.envelope_factor
    mp = ctx.mp

    scale, parts = _closed_form(formula, regime, ctx, evaluate=True)
    direct = parts.direct
    assert direct is not None
    main = _main_from_parts(parts, ctx)
    mode = "relative"
    if parts.cosine is not None and abs(parts.cosine) <= oscillation_floor:
        mode = "absolute"
        ratio = logc_to_complex(logc_div(direct, parts.prefactor, ctx), ctx)
        rel_dev = abs(ratio - parts.cosine)
    else:
        rel_dev = logc_rel_dev(direct, main, ctx)

    stated_rate = formula.rate_coefficient * mp.pi * scale.big
    envelope = mp.exp(-stated_rate)
    passed = bool(rel_dev <= envelope_factor * envelope)
    logger.debug(
        f"{formula.value} n={regime.n} u={regime.u}: rel_dev {float(rel_dev):.3e}, "
        f"envelope {float(envelope):.3e} ({mode})"
    )
    return AsymptoticComparison(
        formula=formula,
        regime=regime,
        direct=direct,
        main_term=main,
        rel_dev=float(rel_dev),
        stated_rate=float(stated_rate),
        oscillatory_factor=None if parts.cosine is None else float(parts.cosine),
        mode=mode,
        envelope=float(envelope),
        passed=passed,
    )


def fit_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of ys against xs; 0 for a flat sequence."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise DomainError("a slope fit needs at least two paired points")
    if max(ys) == min(ys):
        return 0.0
    slope, _ = np.polyfit(np.asarray(xs, dtype=float), np.asarray(ys, dtype=float), 1)
    return float(slope)


def _regime_values(
    formula: ScaledFormula, nu: float | None, alpha: float | None
) -> dict[str, float]:
    values: dict[str, float] = {}
    if formula.requires == "nu" and nu is not None:
        values["nu"] = nu
    if formula.requires == "alpha" and alpha is not None:
        values["alpha"] = alpha
    return values


def _measure(
    formula: ScaledFormula,
    a_exp: float,
    u: float,
    n_list: Sequence[int],
    ctx: PrecisionContext | None,
    nu: float | None,
    alpha: float | None,
) -> list[float]:
    if len(n_list) < 3:
        raise ConfigurationError(f"a rate fit needs at least three n values, got {len(n_list)}")
    if list(n_list) != sorted(set(n_list)):
        raise ConfigurationError("n values of a rate fit must be strictly ascending")
    extra = _regime_values(formula, nu, alpha)
    rel_devs = []
    for n in n_list:
        regime = ScaledRegime.for_formula(formula, n=n, a_exp=a_exp, u=u, **extra)
        comparison = compare_asymptotic(formula, regime, ctx)
        if comparison.rel_dev <= 0:
            raise DomainError(f"rel_dev vanished at n = {n}; the slope is undefined")
        rel_devs.append(comparison.rel_dev)
    return rel_devs


def rate_fit(
    formula: ScaledFormula,
    a_exp: float,
    u: float,
    n_list: Sequence[int],
    ctx: PrecisionContext | None = None,
    nu: float | None = None,
    alpha: float | None = None,
) -> float:
    """
    Least-squares slope of ln(rel_dev) against n^a over ascending ``n_list``.

    The expected slope is -rate_coefficient * pi.

    Raises:
        ConfigurationError: If fewer than three ascending n values are given
        DomainError: If some rel_dev is exactly zero
    """
    rel_devs = _measure(formula, a_exp, u, n_list, ctx, nu, alpha)
    return fit_slope([n**a_exp for n in n_list], [math.log(r) for r in rel_devs])


def rate_fit_report(
    formula: ScaledFormula,
    a_exp: float,
    u: float,
    n_list: Sequence[int],
    ctx: PrecisionContext | None = None,
    nu: float | None = None,
    alpha: float | None = None,
) -> RateFitReport:
    """
    Rate fit with the measured deviations, the expected slope and its acceptance window.

    The window is [-4 c pi, -c pi / 2] for the formula's rate coefficient c. The stated
    rate bounds the error from above, so a slope steeper than the window passes and is
    flagged faster_than_stated; a shallower one fails.
    """
    rel_devs = _measure(formula, a_exp, u, n_list, ctx, nu, alpha)
    slope = fit_slope([n**a_exp for n in n_list], [math.log(r) for r in rel_devs])
    coefficient = formula.rate_coefficient
    window = (-4 * coefficient * math.pi, -coefficient * math.pi / 2)
    within = window[0] <= slope <= window[1]
    faster = slope < window[0]
    decreasing = all(b < a for a, b in zip(rel_devs, rel_devs[1:]))
    if faster:
        logger.info(
            f"{formula.value} u={u}: slope {slope:.4g} is steeper than {window[0]:.4g}, "
            "the deviation decays faster than stated"
        )
    elif not within:
        logger.warning(
            f"{formula.value} u={u}: measured slope {slope:.4g} "
            f"outside [{window[0]:.4g}, {window[1]:.4g}]"
        )
    return RateFitReport(
        formula=formula,
        a_exp=a_exp,
        u=u,
        n_values=list(n_list),
        rel_devs=rel_devs,
        slope=slope,
        expected_slope=-coefficient * math.pi,
        window=window,
        within_window=within,
        faster_than_stated=faster,
        decreasing=decreasing,
        passed=(within or faster) and decreasing,
    )
