"""Command-line interface.

One subcommand per subsystem: eval, zeros, extrema, bessel, norms,
series, verify.  Exit status is 0 when everything passed, 1 when a
verification check failed, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys

from . import bessel, norms, series
from ._version import __version__
from .errors import ConfigError, ConvergenceError, DegreeCapError, DomainError
from .legendre import (
    bernstein_envelope,
    eval_legendre,
    eval_legendre_derivative,
    eval_legendre_second,
)
from .report import emit_table, format_float, json_text
from .roots import legendre_extrema, legendre_zeros
from .verify import VerifyConfig, run_all

__all__ = ["main", "build_parser"]


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=1e-8,
                     help="series tolerance (default 1e-8)")
    sub.add_argument("--degree-cap", type=int, default=None,
                     help="override the degree cap")
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="output format for tables/reports")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--jobs", type=int, default=1,
                     help="parallel workers for the verify battery")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpzonal", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate P_n and derived quantities")
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--kind", choices=("value", "derivative", "second", "envelope"),
                        default="value")
    _common_flags(p_eval)

    p_zeros = subs.add_parser("zeros", help="positive zeros of P_n with brackets")
    p_zeros.add_argument("--n", type=int, required=True)
    _common_flags(p_zeros)

    p_ext = subs.add_parser("extrema", help="positive extrema of P_n")
    p_ext.add_argument("--n", type=int, required=True)
    _common_flags(p_ext)

    p_bes = subs.add_parser("bessel", help="zeros of J1 with J0 extrema")
    p_bes.add_argument("--count", type=int, default=10)
    p_bes.add_argument("--x", type=float, default=None,
                       help="also print J0(x), J1(x) for this argument")
    _common_flags(p_bes)

    p_norms = subs.add_parser("norms", help="sign-partitioned Lp integrals of P_n")
    p_norms.add_argument("--n", type=int, required=True)
    p_norms.add_argument("--p", type=float, required=True)
    p_norms.add_argument("--rel-tol", type=float, default=1e-10)
    p_norms.add_argument("--base-nodes", type=int, default=48)
    _common_flags(p_norms)

    p_series = subs.add_parser("series", help="series values with tail bounds")
    p_series.add_argument("--which",
                          choices=("extrema-sum", "zeta3", "hurwitz", "limit-bound"),
                          default="extrema-sum")
    p_series.add_argument("--p", type=float, default=6.0)
    _common_flags(p_series)

    p_verify = subs.add_parser("verify", help="run the verification battery")
    p_verify.add_argument("--p", type=float, default=6.0)
    p_verify.add_argument("--n-list", default="1,2,5,10,25,50",
                          help="comma-separated list of quarter-degrees q (degree 4q)")
    p_verify.add_argument("--rel-tol", type=float, default=1e-10)
    p_verify.add_argument("--base-nodes", type=int, default=48)
    _common_flags(p_verify)

    return parser


def _emit(obj, args) -> None:
    emit_table(obj, args.format, args.out)


def _cmd_eval(args) -> int:
    fns = {
        "value": eval_legendre,
        "derivative": eval_legendre_derivative,
        "second": eval_legendre_second,
        "envelope": bernstein_envelope,
    }
    if args.kind == "envelope":
        value = bernstein_envelope(args.n, args.x)
    else:
        value = fns[args.kind](args.n, args.x, degree_cap=args.degree_cap)
    print(format_float(value))
    return 0


def _cmd_zeros(args) -> int:
    _emit(legendre_zeros(args.n, degree_cap=args.degree_cap), args)
    return 0


def _cmd_extrema(args) -> int:
    _emit(legendre_extrema(args.n, degree_cap=args.degree_cap), args)
    return 0


def _cmd_bessel(args) -> int:
    if args.x is not None:
        print(format_float(bessel.eval_j0(args.x)), format_float(bessel.eval_j1(args.x)))
        return 0
    _emit(bessel.j1_zeros(args.count), args)
    return 0


def _cmd_norms(args) -> int:
    cfg = norms.QuadratureConfig(base_nodes=args.base_nodes, rel_tol=args.rel_tol)
    report = norms.norm_ratio(args.n, args.p, cfg, degree_cap=args.degree_cap)
    _emit(report, args)
    return 0


def _cmd_series(args) -> int:
    if args.which == "extrema-sum":
        payload = series.bessel_extrema_sum(args.p, args.tol).payload()
    elif args.which == "zeta3":
        payload = series.zeta3(min(args.tol, 1e-3)).payload()
    elif args.which == "hurwitz":
        payload = {"residual": series.hurwitz_identity_residual(min(args.tol, 1e-6))}
    else:
        payload = {"p": args.p,
                   "limit_lower_bound": series.prop_limit_lower_bound(args.p, args.tol)}
    text = json_text(payload) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    try:
        quarters = tuple(int(tok) for tok in args.n_list.split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"bad --n-list: {args.n_list!r}") from exc
    cfg = VerifyConfig(
        degree_cap=args.degree_cap if args.degree_cap is not None else VerifyConfig.degree_cap,
        series_tol=args.tol,
        rel_tol=args.rel_tol,
        base_nodes=args.base_nodes,
        p=args.p,
        n_list=quarters,
        jobs=args.jobs,
    )
    report = run_all(cfg)
    _emit(report, args)
    return 0 if report.overall == "pass" else 1


_COMMANDS = {
    "eval": _cmd_eval,
    "zeros": _cmd_zeros,
    "extrema": _cmd_extrema,
    "bessel": _cmd_bessel,
    "norms": _cmd_norms,
    "series": _cmd_series,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, DomainError, DegreeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
