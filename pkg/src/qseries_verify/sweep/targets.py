"""Verification targets: default grids and per-point evaluation."""

import random
from typing import Any

from ..asymptotics.scaled import compare_asymptotic, rate_fit_report
from ..asymptotics.theta_reps import theta_rep
from ..core.config import get_config
from ..core.exceptions import ConfigurationError
from ..core.interfaces import SweepTarget
from ..core.nome import ModularPoint, QPoint
from ..core.numerics import PrecisionContext, default_context
from ..functions.quadrature import orthogonality_matrix
from ..models.params import ScaledFormula, ScaledRegime
from ..models.sweep import SweepRow, TargetName
from ..qseries.pochhammer import remainder_r1, remainder_r2, smallest_certified_index
from ..theta.eta import dedekind_eta, qq_infinity_scaled
from ..theta.jacobi import theta, theta_modular, theta_triple_product
from ..utils.validators import (
    format_complex,
    parse_complex,
    parse_int_list,
    require,
    validate_choice,
    validate_formula,
)

REMAINDER_BASES = ("0.1", "1", "2+1j", "-3", "4j")
REMAINDER_NOMES = (0.3, 0.5, 0.9)
REMAINDER_SPAN = 10

ETA_GAMMAS = (1.0, 2.0)
ETA_EXPONENTS = (0.3, 0.4)
ETA_INDICES = (16, 32, 64)

THETA_POINTS = 100
THETA_STRESS_IMAG = 0.02
# dual-path agreement 2^-(p - 10); transformation paths 2^-(p - 16)
THETA_DUAL_SLACK_BITS = 10
THETA_MODULAR_SLACK_BITS = 16

REP_NOMES = (0.3, 0.5)
REP_ARGUMENTS = ("2", "1+1j", "0.5")
REP_PARAMETER = 0.5
REP_SPAN = 16
REP_GATE_DIVISOR = {"aq": 2, "bessel": 2, "sw": 4, "laguerre": 4}
RECONSTRUCTION_SLACK_BITS = 12

SCALED_EXPONENT = 0.4
SCALED_SHIFTS = (0.0, 0.3)
SCALED_INDICES = (16, 32, 64, 128)
SCALED_PARAMETER = 0.5

ORTHOGONALITY_NOME = 0.5
ORTHOGONALITY_ALPHA = 0.5
ORTHOGONALITY_DEGREE = 3


def _row(
    index: int,
    target: TargetName,
    params: dict[str, Any],
    values: dict[str, Any],
    measured: float | None,
    bound: float | None,
    passed: bool,
    reason: str = "",
) -> SweepRow:
    return SweepRow(
        index=index,
        target=target.value,
        parameters=params,
        values=values,
        measured=measured,
        bound=bound,
        status="pass" if passed else "fail",
        reason=reason,
    )


def _rel(a: Any, b: Any) -> Any:
    return abs(a - b) / abs(b) if b != 0 else abs(a)


def _gate_index(q: float, divisor: int) -> int:
    """Smallest n with 2 q^{n/divisor} / (1 - q) < 1."""
    n = 1
    while not 2 * q ** (n / divisor) / (1 - q) < 1:
        n += 1
    return n


class RemaindersTarget(SweepTarget):
    """Tail remainders r1 and r2 against 2|a| q^n / (1 - q)."""

    name = TargetName.REMAINDERS.value

    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """Bases x nomes, n from the smallest certified index over the next ten."""
        ctx = default_context()
        grid = []
        for a in REMAINDER_BASES:
            for q in REMAINDER_NOMES:
                start = smallest_certified_index(parse_complex(a), QPoint.from_q(q, ctx), ctx)
                for n in range(start, start + REMAINDER_SPAN + 1):
                    grid.append({"a": a, "q": q, "n": n})
        return grid

    def evaluate(
        self, index: int, params: dict[str, Any], options: dict[str, Any], ctx: PrecisionContext
    ) -> SweepRow:
        """Evaluate both remainders at one (a, q, n)."""
        a = parse_complex(require(params, "a"))
        qp = QPoint.from_q(float(require(params, "q")), ctx)
        n = int(require(params, "n"))
        r1 = remainder_r1(a, qp, n, ctx)
        r2 = remainder_r2(a, qp, n, ctx)
        values = {
            "r1_abs": abs(r1.value),
            "r2_abs": abs(r2.value),
        }
        measured = max(abs(r1.value), abs(r2.value))
        return _row(
            index,
            TargetName.REMAINDERS,
            params,
            values,
            measured,
            r1.bound,
            r1.satisfied and r2.satisfied,
        )


class EtaScalingTarget(SweepTarget):
    """Scaled (q;q)_inf against its closed form within 10 exp(-2 pi gamma n^a)."""

    name = TargetName.ETA_SCALING.value

    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """gamma x a x n."""
        return [
            {"gamma": gamma, "a_exp": a, "n": n}
            for gamma in ETA_GAMMAS
            for a in ETA_EXPONENTS
            for n in ETA_INDICES
        ]

    def evaluate(
        self, index: int, params: dict[str, Any], options: dict[str, Any], ctx: PrecisionContext
    ) -> SweepRow:
        """Compare the product and its closed form at one (gamma, a, n)."""
        factor = get_config().envelope_factor
        report = qq_infinity_scaled(
            float(require(params, "gamma")),
            float(require(params, "a_exp")),
            int(require(params, "n")),
            ctx,
            envelope_factor=factor,
        )
        values = {
            "reciprocal_rel_dev": report.reciprocal_rel_dev,
            "envelope": report.envelope,
        }
        return _row(
            index,
            TargetName.ETA_SCALING,
            params,
            values,
            report.rel_dev,
            factor * report.envelope,
            report.within_envelope,
        )


class ThetaTarget(SweepTarget):
    """Series against triple product, modular transformations and the eta transformation."""

    name = TargetName.THETA.value

    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """Seeded random (v, tau); the first point sits at Im(tau) = 0.02."""
        points = int(options.get("points", THETA_POINTS))
        rng = random.Random(int(options.get("seed", 0)))
        grid = []
        for i in range(points):
            v = complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5))
            imag = THETA_STRESS_IMAG if i == 0 else rng.uniform(THETA_STRESS_IMAG, 2.0)
            tau = complex(rng.uniform(-1, 1), imag)
            grid.append({"v": format_complex(v), "tau": format_complex(tau)})
        return grid

    def evaluate(
        self, index: int, params: dict[str, Any], options: dict[str, Any], ctx: PrecisionContext
    ) -> SweepRow:
        """Largest deviation over the four kinds and the eta transformation."""
        mp = ctx.mp
        v = mp.mpc(parse_complex(require(params, "v")))
        tau = mp.mpc(parse_complex(require(params, "tau")))
        point = ModularPoint.create(v, tau, ctx)
        transformed = ModularPoint.create(v / tau, -1 / tau, ctx)

        dual = mp.zero
        modular = mp.zero
        for kind in (1, 2, 3, 4):
            dual = max(dual, _rel(theta(kind, point, ctx), theta_triple_product(kind, point, ctx)))
            modular = max(
                modular, _rel(theta(kind, transformed, ctx), theta_modular(kind, point, ctx))
            )
        eta = _rel(dedekind_eta(-1 / tau, ctx), mp.sqrt(tau / mp.j) * dedekind_eta(tau, ctx))

        dual_bound = mp.ldexp(1, -(ctx.precision_bits - THETA_DUAL_SLACK_BITS))
        modular_bound = mp.ldexp(1, -(ctx.precision_bits - THETA_MODULAR_SLACK_BITS))
        values = {
            "dual_rel_dev": float(dual),
            "modular_rel_dev": float(modular),
            "eta_rel_dev": float(eta),
        }
        worst = max(dual, modular, eta)
        passed = dual <= dual_bound and max(modular, eta) <= modular_bound
        return _row(
            index,
            TargetName.THETA,
            params,
            values,
            float(worst),
            float(modular_bound),
            bool(passed),
        )


class ThetaRepTarget(SweepTarget):
    """Exact theta representations with their certified remainder bounds."""

    name = TargetName.THETA_REP.value

    def _family(self, options: dict[str, Any]) -> str:
        return validate_choice(
            str(require(options, "family")), tuple(REP_GATE_DIVISOR), "theta-rep family"
        )

    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """q x z x n from the regime gate over the next sixteen indices."""
        family = self._family(options)
        param = REP_PARAMETER if family in ("bessel", "laguerre") else None
        grid = []
        for q in REP_NOMES:
            start = _gate_index(q, REP_GATE_DIVISOR[family])
            for z_text in REP_ARGUMENTS:
                z = parse_complex(z_text)
                for n in range(start, start + REP_SPAN + 1):
                    grid.append(
                        {"q": q, "z_re": z.real, "z_im": z.imag, "n": n, "extra_param": param}
                    )
        return grid

    def evaluate(
        self, index: int, params: dict[str, Any], options: dict[str, Any], ctx: PrecisionContext
    ) -> SweepRow:
        """Measure e(n) at one (q, z, n)."""
        family = self._family(options)
        z = complex(float(require(params, "z_re")), float(params.get("z_im", 0.0)))
        qp = QPoint.from_q(float(require(params, "q")), ctx)
        param = params.get("extra_param")
        result = theta_rep(
            family,  # type: ignore[arg-type]
            z,
            qp,
            int(require(params, "n")),
            None if param is None else float(param),
            ctx,
        )
        limit = float(ctx.mp.ldexp(1, -(ctx.precision_bits - RECONSTRUCTION_SLACK_BITS)))
        values = {
            "residual_re": result.residual.real,
            "residual_im": result.residual.imag,
            "reconstruction_rel_dev": result.reconstruction_rel_dev,
        }
        passed = result.satisfied and result.reconstruction_rel_dev <= limit
        return _row(
            index,
            TargetName.THETA_REP,
            params,
            values,
            abs(result.residual),
            result.bound,
            passed,
        )


def _option(options: dict[str, Any], key: str, default: Any) -> Any:
    """Option value, or the default only when the option is unset (0 is a valid value)."""
    value = options.get(key)
    return default if value is None else value


def _scaled_extra(formula: ScaledFormula, options: dict[str, Any]) -> dict[str, float]:
    if formula.requires is None:
        return {}
    return {formula.requires: float(_option(options, formula.requires, SCALED_PARAMETER))}


class ScaledTarget(SweepTarget):
    """Direct evaluation at a scaled argument against the closed-form main term."""

    name = TargetName.SCALED.value

    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """u x n at a = 0.4, with nu or alpha = 0.5 where the formula needs one."""
        formula = validate_formula(str(require(options, "formula")))
        a_exp = float(_option(options, "a_exp", SCALED_EXPONENT))
        shifts = _option(options, "u", SCALED_SHIFTS)
        indices = _option(options, "n", SCALED_INDICES)
        extra = _scaled_extra(formula, options)
        return [{"n": n, "a_exp": a_exp, "u": float(u), **extra} for u in shifts for n in indices]

    def evaluate(
        self, index: int, params: dict[str, Any], options: dict[str, Any], ctx: PrecisionContext
    ) -> SweepRow:
        """Compare one regime."""
        formula = validate_formula(str(require(options, "formula")))
        regime = ScaledRegime.for_formula(formula, **params)
        comparison = compare_asymptotic(formula, regime, ctx)
        direct_mag, direct_phase = comparison.direct.to_floats()
        main_mag, main_phase = comparison.main_term.to_floats()
        values = {
            "direct_log_mag": direct_mag,
            "direct_phase": direct_phase,
            "main_log_mag": main_mag,
            "main_phase": main_phase,
            "oscillatory_factor": comparison.oscillatory_factor,
            "mode": comparison.mode,
            "stated_rate": comparison.stated_rate,
        }
        factor = get_config().envelope_factor
        return _row(
            index,
            TargetName.SCALED,
            params,
            values,
            comparison.rel_dev,
            factor * comparison.envelope,
            comparison.passed,
        )


class OrthogonalityTarget(SweepTarget):
    """Quadrature Gram matrices against the orthogonality norms."""

    name = TargetName.ORTHOGONALITY.value

    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """Both families at q = 0.5 up to degree 3, or the single configured family."""
        q = float(_option(options, "q", ORTHOGONALITY_NOME))
        degree = int(_option(options, "max_degree", ORTHOGONALITY_DEGREE))
        alpha = float(_option(options, "alpha", ORTHOGONALITY_ALPHA))
        rows = [
            {"family": "sw", "q": q, "max_degree": degree, "alpha": None},
            {"family": "qlaguerre", "q": q, "max_degree": degree, "alpha": alpha},
        ]
        family = options.get("family")
        if family is None:
            return rows
        validate_choice(str(family), ("sw", "qlaguerre"), "orthogonal family")
        return [r for r in rows if r["family"] == family]

    def evaluate(
        self, index: int, params: dict[str, Any], options: dict[str, Any], ctx: PrecisionContext
    ) -> SweepRow:
        """Build one Gram matrix at the configured quadrature precision."""
        family = validate_choice(str(require(params, "family")), ("sw", "qlaguerre"), "family")
        alpha = params.get("alpha")
        quadrature_ctx = ctx.with_precision(get_config().quadrature_precision_bits)
        result = orthogonality_matrix(
            family,  # type: ignore[arg-type]
            float(require(params, "q")),
            int(require(params, "max_degree")),
            None if alpha is None else float(alpha),
            quadrature_ctx,
        )
        values = {
            "max_diagonal_rel_error": result.max_diagonal_rel_error,
            "max_offdiagonal_ratio": result.max_offdiagonal_ratio,
        }
        measured = max(result.max_diagonal_rel_error, result.max_offdiagonal_ratio)
        return _row(
            index,
            TargetName.ORTHOGONALITY,
            params,
            values,
            measured,
            result.tolerance,
            result.passed,
        )


class RateFitTarget(SweepTarget):
    """Least-squares decay rate of a scaled comparison over n."""

    name = TargetName.RATE_FIT.value

    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """One fit per u over n = 16, 32, 64, 128 at a = 0.4."""
        formula = validate_formula(str(require(options, "formula")))
        a_exp = float(_option(options, "a_exp", SCALED_EXPONENT))
        shifts = _option(options, "u", SCALED_SHIFTS)
        indices = _option(options, "n", SCALED_INDICES)
        extra = _scaled_extra(formula, options)
        n_text = " ".join(str(n) for n in indices)
        return [{"a_exp": a_exp, "u": float(u), "n_values": n_text, **extra} for u in shifts]

    def evaluate(
        self, index: int, params: dict[str, Any], options: dict[str, Any], ctx: PrecisionContext
    ) -> SweepRow:
        """Fit one slope; passes when it is in or steeper than the window and rel_dev decreases."""
        formula = validate_formula(str(require(options, "formula")))
        report = rate_fit_report(
            formula,
            float(require(params, "a_exp")),
            float(require(params, "u")),
            parse_int_list(str(require(params, "n_values"))),
            ctx,
            nu=params.get("nu"),
            alpha=params.get("alpha"),
        )
        values = {
            "slope": report.slope,
            "expected_slope": report.expected_slope,
            "window_lo": report.window[0],
            "window_hi": report.window[1],
            "decreasing": report.decreasing,
            "faster_than_stated": report.faster_than_stated,
        }
        return _row(
            index,
            TargetName.RATE_FIT,
            params,
            values,
            report.slope,
            None,
            report.passed,
        )


_TARGETS: dict[TargetName, SweepTarget] = {
    TargetName.REMAINDERS: RemaindersTarget(),
    TargetName.ETA_SCALING: EtaScalingTarget(),
    TargetName.THETA: ThetaTarget(),
    TargetName.THETA_REP: ThetaRepTarget(),
    TargetName.SCALED: ScaledTarget(),
    TargetName.ORTHOGONALITY: OrthogonalityTarget(),
    TargetName.RATE_FIT: RateFitTarget(),
}


def get_target(name: TargetName | str) -> SweepTarget:
    """
    Look up a target by name.

    Raises:
        ConfigurationError: If the name is unknown
    """
    try:
        return _TARGETS[TargetName(name)]
    except ValueError as e:
        raise ConfigurationError(f"unknown sweep target: {name}", e)
