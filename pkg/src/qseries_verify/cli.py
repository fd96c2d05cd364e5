"""Command-line verification harness."""

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from functools import partial
from typing import Any

from pydantic import ValidationError

from .core.config import get_config
from .core.exceptions import (
    BoundViolationError,
    ConfigurationError,
    QSeriesError,
    ResourceError,
)
from .core.nome import ModularPoint, QPoint
from .core.numerics import LogComplex, PrecisionContext, logc_from_complex, logc_to_complex
from .functions.polynomials import q_laguerre, stieltjes_wigert
from .functions.qfunctions import euler_Eq, jackson_J2, q_gamma, ramanujan_Aq
from .models.params import PolynomialSpec, ScaledFormula
from .models.sweep import SweepConfig, TargetName
from .sweep.runner import render_report, run_sweep
from .theta.eta import dedekind_eta
from .theta.jacobi import theta, theta_zq
from .utils.logger import setup_logging
from .utils.validators import parse_complex, require

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3

EVAL_FUNCTIONS = (
    "Eq",
    "gammaq",
    "Aq",
    "J2",
    "SW",
    "qLaguerre",
    "theta1",
    "theta2",
    "theta3",
    "theta4",
    "eta",
)

# digits printed by eval
EVAL_DIGITS = 30


def _add_scaled_arguments(parser: argparse.ArgumentParser, single_u: bool) -> None:
    formulas = [f.value for f in ScaledFormula]
    parser.add_argument("--formula", required=True, choices=formulas, help="Scaled formula")
    parser.add_argument("--a", dest="a_exp", type=float, help="Exponent a in (0, 1/2)")
    if single_u:
        parser.add_argument("--u", type=float, required=True, help="Real shift u")
        parser.add_argument("--n", type=int, nargs="+", required=True, help="Indices to fit")
    else:
        parser.add_argument("--u", type=float, nargs="+", help="Real shifts u")
        parser.add_argument("--n", type=int, nargs="+", help="Scaling indices")
    parser.add_argument("--nu", type=float, help="q-Bessel order")
    parser.add_argument("--alpha", type=float, help="q-Laguerre parameter")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with its global flags and subcommands."""
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Verify q-series bounds, theta identities and scaled asymptotics.",
    )
    parser.add_argument("--precision", type=int, help="Working precision in bits")
    parser.add_argument("--out", help="Report path (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="Report format")
    parser.add_argument("--fail-fast", action="store_true", help="Stop at the first failing row")
    parser.add_argument("--jobs", type=int, help="Parallel workers")
    parser.add_argument(
        "--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"), help="Logging level"
    )
    parser.add_argument(
        "--timings", action="store_true", help="Add wall_ms to the report (not reproducible)"
    )

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("remainders", help="Tail remainder bounds of (a;q)_inf")
    sub.add_parser("eta-scaling", help="Scaled (q;q)_inf against its closed form")

    theta_parser = sub.add_parser("theta", help="Theta dual paths and transformations")
    theta_parser.add_argument("--points", type=int, help="Number of random (v, tau)")
    theta_parser.add_argument("--seed", type=int, help="Random seed")

    rep = sub.add_parser("theta-rep", help="Exact theta representations")
    rep.add_argument("--family", required=True, choices=("aq", "bessel", "sw", "laguerre"))

    scaled = sub.add_parser("scaled", help="Scaled-limit comparisons")
    _add_scaled_arguments(scaled, single_u=False)

    orth = sub.add_parser("orthogonality", help="Quadrature orthogonality checks")
    orth.add_argument("--family", required=True, choices=("sw", "qlaguerre"))
    orth.add_argument("--q", type=float, help="Nome in (0, 1)")
    orth.add_argument("--alpha", type=float, help="q-Laguerre parameter")
    orth.add_argument("--max-degree", type=int, help="Largest degree")

    fit = sub.add_parser("rate-fit", help="Least-squares decay rate of a scaled comparison")
    _add_scaled_arguments(fit, single_u=True)

    ev = sub.add_parser("eval", help="Evaluate one function")
    ev.add_argument("--fn", required=True, choices=EVAL_FUNCTIONS)
    ev.add_argument("--q", type=float, help="Nome in (0, 1)")
    ev.add_argument("--z", help="Complex argument")
    ev.add_argument("--x", type=float, help="Real argument")
    ev.add_argument("--n", type=int, help="Degree")
    ev.add_argument("--nu", type=float, help="q-Bessel order")
    ev.add_argument("--alpha", type=float, help="q-Laguerre parameter")
    ev.add_argument("--v", help="Theta argument v")
    ev.add_argument("--tau", help="Half-period ratio tau")
    return parser


def _options(args: argparse.Namespace) -> dict[str, Any]:
    command = args.command
    if command == "theta":
        raw = {"points": args.points, "seed": args.seed}
    elif command == "theta-rep":
        raw = {"family": args.family}
    elif command in ("scaled", "rate-fit"):
        u = [args.u] if command == "rate-fit" else args.u
        raw = {
            "formula": args.formula,
            "a_exp": args.a_exp,
            "u": u,
            "n": args.n,
            "nu": args.nu,
            "alpha": args.alpha,
        }
    elif command == "orthogonality":
        raw = {
            "family": args.family,
            "q": args.q,
            "alpha": args.alpha,
            "max_degree": args.max_degree,
        }
    else:
        raw = {}
    return {k: v for k, v in raw.items() if v is not None}


def sweep_config_from_args(args: argparse.Namespace) -> SweepConfig:
    """
    Translate parsed arguments into a sweep configuration.

    Unset flags fall back to the application configuration.
    """
    config = get_config()
    return SweepConfig(
        target=TargetName(args.command),
        options=_options(args),
        precision_bits=config.precision_bits if args.precision is None else args.precision,
        guard_bits=config.guard_bits,
        max_terms=config.max_terms,
        output_path=args.out,
        output_format=args.format,
        fail_fast=args.fail_fast,
        jobs=config.default_jobs if args.jobs is None else args.jobs,
        include_timing=args.timings,
    )


def _nome(args: argparse.Namespace, ctx: PrecisionContext) -> QPoint:
    return QPoint.from_q(require(vars(args), "q"), ctx)


def _theta_value(kind: int, args: argparse.Namespace, ctx: PrecisionContext) -> Any:
    if args.tau is not None:
        v = parse_complex(args.v or "0")
        return theta(kind, ModularPoint.create(v, parse_complex(args.tau), ctx), ctx)
    z = parse_complex(require(vars(args), "z"))
    return theta_zq(kind, ctx.mp.mpc(z), require(vars(args), "q"), ctx)


def evaluate_function(args: argparse.Namespace, ctx: PrecisionContext) -> LogComplex:
    """
    Evaluate the function named by ``--fn`` at the given arguments.

    Raises:
        ConfigurationError: If a required argument is missing
    """
    params = vars(args)
    handlers: dict[str, Callable[[], Any]] = {
        "Eq": lambda: euler_Eq(parse_complex(require(params, "z")), _nome(args, ctx), ctx),
        "gammaq": lambda: q_gamma(require(params, "x"), _nome(args, ctx), ctx),
        "Aq": lambda: ramanujan_Aq(parse_complex(require(params, "z")), _nome(args, ctx), ctx),
        "J2": lambda: jackson_J2(
            parse_complex(require(params, "z")), require(params, "nu"), _nome(args, ctx), ctx
        ),
        "SW": lambda: stieltjes_wigert(
            require(params, "x"), require(params, "n"), _nome(args, ctx), ctx
        ),
        "qLaguerre": lambda: q_laguerre(
            require(params, "x"),
            PolynomialSpec(n=require(params, "n"), alpha=require(params, "alpha")),
            _nome(args, ctx),
            ctx,
        ),
        "eta": lambda: dedekind_eta(parse_complex(require(params, "tau")), ctx),
    }
    for kind in (1, 2, 3, 4):
        handlers[f"theta{kind}"] = partial(_theta_value, kind, args, ctx)

    value = handlers[args.fn]()
    if isinstance(value, LogComplex):
        return value
    return logc_from_complex(value, ctx)


def _print_evaluation(name: str, value: LogComplex, ctx: PrecisionContext) -> None:
    mp = ctx.mp
    data = {
        "fn": name,
        "log_mag": mp.nstr(value.log_mag, EVAL_DIGITS),
        "phase": mp.nstr(value.phase, EVAL_DIGITS),
        "value": mp.nstr(logc_to_complex(value, ctx), EVAL_DIGITS),
    }
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def _execute(args: argparse.Namespace) -> int:
    if args.command == "eval":
        precision = get_config().precision_bits if args.precision is None else args.precision
        ctx = PrecisionContext(precision_bits=precision)
        _print_evaluation(args.fn, evaluate_function(args, ctx), ctx)
        return EXIT_OK

    cfg = sweep_config_from_args(args)
    report = run_sweep(cfg)
    if cfg.output_path is None:
        sys.stdout.write(render_report(report, cfg.output_format, cfg.include_timing))
    if report.aborted:
        raise BoundViolationError(f"{report.target}: aborted at the first failing row")
    return EXIT_OK if report.summary.failed == 0 else EXIT_VIOLATION


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, run the command and map the outcome to an exit code.

    Returns:
        0 when every row passes, 1 on a bound violation, 2 on a configuration,
        validation or output error, 3 when the term cap is exceeded
    """
    args = build_parser().parse_args(argv)
    try:
        config = get_config()
    except ValidationError as e:
        sys.stderr.write(f"Invalid configuration: {e}\n")
        return EXIT_CONFIG
    logger = setup_logging(
        args.log_level or config.log_level,
        config.log_format,
        jobs=config.default_jobs if args.jobs is None else args.jobs,
    )

    try:
        return _execute(args)
    except BoundViolationError as e:
        logger.error(e.message)
        return EXIT_VIOLATION
    except ResourceError as e:
        logger.error(f"Resource limit: {e.message}")
        return EXIT_RESOURCE
    except ConfigurationError as e:
        logger.error(f"Configuration error: {e.message}")
        return EXIT_CONFIG
    except ValidationError as e:
        logger.error(f"Invalid parameters: {e}")
        return EXIT_CONFIG
    except QSeriesError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        return EXIT_CONFIG


def run() -> None:
    """Console entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
