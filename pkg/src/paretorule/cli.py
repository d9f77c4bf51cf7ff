"""Command-line interface.

Exit codes: 0 success, 1 domain or numerical error, 2 usage error. Errors
are reported on stderr as a single ``error: <kind>: <message>`` line.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import curves, export, gaussian, pareto, solver
from .errors import ConvergenceError, DegenerateFitError, DomainError
from .params import GaussianParams, ParetoParams, RulePoint

FORMATS = ("text", "csv", "json", "svg")


class UsageError(Exception):
    pass


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _pair(text: str) -> tuple[float, float]:
    vals = _floats(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
    return vals[0], vals[1]


def _num(v: float, precision: int) -> str:
    return f"{v:#.{precision}g}"


def _q(v: float, precision: int) -> float:
    return float(f"{v:.{precision}g}")


def _resolve_format(args) -> str:
    fmt = args.format
    if fmt is None:
        suffix = Path(args.out).suffix.lstrip(".").lower() if args.out else ""
        fmt = suffix if suffix in FORMATS else "text"
    return fmt


def _write(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(doc: dict) -> str:
    return json.dumps(doc, allow_nan=False) + "\n"


def _require(fmt: str, allowed: tuple[str, ...], command: str) -> None:
    if fmt not in allowed:
        raise UsageError(f"{command} does not support --format {fmt}")


# -- threshold / ratio resolution ---------------------------------------------


def _gaussian_ratio(args) -> float:
    if args.ratio is not None:
        if args.mu is not None or args.sigma is not None:
            raise UsageError("give either --ratio or --mu/--sigma, not both")
        return args.ratio
    if args.mu is None or args.sigma is None:
        raise UsageError("need --ratio, or both --mu and --sigma")
    return GaussianParams(args.mu, args.sigma).ratio


def _thresholds_from_X(xs: list[float], args) -> list[float]:
    if args.sigma is None:
        raise UsageError("--X needs --sigma (and --mu) to normalize the threshold")
    if args.sigma <= 0:
        raise DomainError("sigma must be positive")
    return [x / args.sigma for x in xs]


# -- commands -----------------------------------------------------------------


def cmd_point(args) -> None:
    fmt = _resolve_format(args)
    _require(fmt, ("text", "json"), "point")
    p = args.precision
    gauss_flags = any(v is not None for v in (args.ratio, args.mu, args.sigma, args.t, args.X))
    pareto_flags = any(v is not None for v in (args.alpha, args.A, args.i_cause))
    if gauss_flags == pareto_flags:
        raise UsageError("give either Gaussian flags (--ratio/--mu/--sigma with --t/--X) "
                         "or Pareto flags (--alpha with --A/--i-cause)")
    if gauss_flags:
        r = _gaussian_ratio(args)
        if (args.t is None) == (args.X is None):
            raise UsageError("give exactly one of --t or --X")
        t = args.t if args.t is not None else _thresholds_from_X([args.X], args)[0]
        point = gaussian.rule_point(t, r)
        model = {"family": "gaussian", "ratio": _q(r, p), "t": _q(t, p)}
    else:
        if args.alpha is None:
            raise UsageError("Pareto point needs --alpha")
        if (args.A is None) == (args.i_cause is None):
            raise UsageError("give exactly one of --A or --i-cause")
        params = ParetoParams(args.alpha, args.x_min)
        A = args.A if args.A is not None else pareto.threshold_for_cause(args.i_cause, params)
        point = pareto.rule_point_pareto(A, params)
        model = {"family": "pareto", "alpha": _q(args.alpha, p), "x_min": _q(args.x_min, p), "A": _q(A, p)}
    if fmt == "json":
        _write(_json({"model": model, "i_cause": _q(point.i_cause, p), "i_effect": _q(point.i_effect, p)}), args)
    else:
        _write(f"i_cause={_num(point.i_cause, p)} i_effect={_num(point.i_effect, p)}\n", args)
    if point.i_effect > 1.0:
        print("note: effect fraction exceeds 1; causes below zero contribute negatively "
              "and are outside the tail", file=sys.stderr)


def cmd_fit_ratio(args) -> None:
    fmt = _resolve_format(args)
    _require(fmt, ("text", "json"), "fit-ratio")
    p = args.precision
    point = RulePoint(args.i_cause, args.i_effect)
    r = solver.ratio_from_point(point)
    t = solver.threshold_from_cause(point.i_cause)
    if fmt == "json":
        _write(_json({"i_cause": _q(point.i_cause, p), "i_effect": _q(point.i_effect, p),
                      "ratio": _q(r, p), "t": _q(t, p)}), args)
    else:
        _write(f"ratio={_num(r, p)} t={_num(t, p)}\n", args)


def _pareto_name(point: RulePoint) -> str:
    return f"{100 * point.i_effect:.6g}/{100 * point.i_cause:.6g}"


def cmd_fit_alpha(args) -> None:
    fmt = _resolve_format(args)
    _require(fmt, ("text", "csv", "json"), "fit-alpha")
    p = args.precision
    base = RulePoint(args.i_cause, args.i_effect)
    alpha = pareto.alpha_from_point(base)
    rows = pareto.iterated_rules(base, args.iterate) if args.iterate else []
    if fmt == "json":
        doc = {"i_cause": _q(base.i_cause, p), "i_effect": _q(base.i_effect, p), "alpha": _q(alpha, p)}
        if rows:
            doc["iterated"] = [{"n": n, "name": _pareto_name(pt), "i_cause": _q(pt.i_cause, p),
                                "i_effect": _q(pt.i_effect, p)} for n, pt in enumerate(rows, 1)]
        _write(_json(doc), args)
    elif fmt == "csv":
        lines = ["n,name,i_cause,i_effect"]
        lines += [f"{n},{_pareto_name(pt)},{export.fmt(pt.i_cause, p)},{export.fmt(pt.i_effect, p)}"
                  for n, pt in enumerate(rows, 1)]
        _write("\n".join(lines) + "\n", args)
    else:
        lines = [f"alpha={_num(alpha, p)}"]
        lines += [f"n={n} rule={_pareto_name(pt)} i_cause={_num(pt.i_cause, p)} i_effect={_num(pt.i_effect, p)}"
                  for n, pt in enumerate(rows, 1)]
        _write("\n".join(lines) + "\n", args)


def cmd_table(args) -> None:
    fmt = _resolve_format(args)
    _require(fmt, ("text", "csv", "json"), "table")
    p = args.precision
    r = _gaussian_ratio(args)
    given = [v is not None for v in (args.t, args.targets, args.X)]
    if sum(given) != 1:
        raise UsageError("give exactly one of --t, --targets or --X")
    if args.targets is not None:
        rules = solver.rule_table(r, targets=args.targets)
    else:
        ts = args.t if args.t is not None else _thresholds_from_X(args.X, args)
        rules = solver.rule_table(r, thresholds=ts)
    if fmt == "json":
        _write(_json({"ratio": _q(r, p), "rules": [
            {"name": rule.name, "t": _q(rule.t, p), "i_cause": _q(rule.point.i_cause, p),
             "i_effect": _q(rule.point.i_effect, p)} for rule in rules]}), args)
    elif fmt == "csv":
        lines = ["name,t,i_cause,i_effect"]
        lines += [",".join([rule.name] + [export.fmt(v, p) for v in (rule.t, *rule.point)]) for rule in rules]
        _write("\n".join(lines) + "\n", args)
    else:
        lines = [f"{rule.name:>7}  t={_num(rule.t, p)}  i_cause={_num(rule.point.i_cause, p)}"
                 f"  i_effect={_num(rule.point.i_effect, p)}" for rule in rules]
        _write("\n".join(lines) + "\n", args)


def _emit_series(series, args, fmt: str, style: export.PlotStyle, x=None, y=None) -> None:
    p = args.precision
    if fmt == "svg":
        text = export.render_svg(series, style=style, x=x, y=y)
    elif fmt == "json":
        text = export.write_json(series, precision=p)
    else:
        text = export.write_csv(series, precision=p)
    _write(text, args)


def cmd_curve(args) -> None:
    fmt = _resolve_format(args)
    ratios = args.ratio if args.ratio is not None else list(curves.FIG2_RATIOS)
    series = [curves.gaussian_curve(r, args.t_min, args.t_max, args.steps) for r in ratios]
    if args.axes == "threshold":
        style = export.PlotStyle(title="Cause and effect fractions against threshold",
                                 x_label="threshold X/sigma", y_label="fraction", guides=(0.0,))
        _emit_series(series, args, fmt, style, x="t", y=("i_cause", "i_effect"))
        return
    marker = None if args.no_marker else args.marker
    style = export.PlotStyle(title="Effect fraction against cause fraction",
                             x_label="I_cause", y_label="I_effect", marker=marker,
                             marker_label="" if marker is None else f"({marker[0]:g}, {marker[1]:g})",
                             guides=(1.0,))
    _emit_series(series, args, fmt, style)


def cmd_profile(args) -> None:
    fmt = _resolve_format(args)
    params = GaussianParams(args.mu, args.sigma)
    series = curves.profile(params, args.x_min, args.x_max, args.steps, args.shade_t)
    style = export.PlotStyle(title=f"Gaussian profile, mu={args.mu:g}, sigma={args.sigma:g}",
                             x_label="x", y_label="f(x), x f(x)", guides=(0.0,))
    _emit_series(series, args, fmt, style)


def cmd_compare(args) -> None:
    fmt = _resolve_format(args)
    series = curves.comparison_curves(args.ratio, args.alpha, args.cause_min, args.steps)
    style = export.PlotStyle(title="Gaussian and Pareto effect-vs-cause curves",
                             x_label="I_cause", y_label="I_effect", log_x=True,
                             marker=(0.2, 0.8), marker_label="(0.2, 0.8)")
    _emit_series(series, args, fmt, style)


def cmd_mc_check(args) -> None:
    fmt = _resolve_format(args)
    _require(fmt, ("text", "json"), "mc-check")
    p = args.precision
    res = gaussian.mc_check(args.ratio, args.t, args.n, args.seed)
    k = 5.0
    if fmt == "json":
        _write(_json({
            "ratio": _q(res.ratio, p), "t": _q(res.t, p), "n": res.n, "seed": res.seed,
            "analytic": [_q(v, p) for v in res.analytic],
            "empirical": [_q(v, p) for v in res.empirical],
            "delta": [_q(res.delta_cause, p), _q(res.delta_effect, p)],
            "bound": [_q(k * res.se_cause, p), _q(k * res.se_effect, p)],
            "within_bound": res.within(k),
        }), args)
        return
    lines = [
        f"analytic   i_cause={_num(res.analytic.i_cause, p)} i_effect={_num(res.analytic.i_effect, p)}",
        f"empirical  i_cause={_num(res.empirical.i_cause, p)} i_effect={_num(res.empirical.i_effect, p)}",
        f"delta      i_cause={_num(res.delta_cause, p)} i_effect={_num(res.delta_effect, p)}",
        f"5-sigma    i_cause={_num(k * res.se_cause, p)} i_effect={_num(k * res.se_effect, p)}",
        f"within_bound={'yes' if res.within(k) else 'no'} n={res.n} seed={res.seed}",
    ]
    _write("\n".join(lines) + "\n", args)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default: from --out suffix, else text)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--precision", type=int, default=export.DEFAULT_PRECISION,
                        help="significant digits (default 10)")

    gauss = argparse.ArgumentParser(add_help=False)
    gauss.add_argument("--ratio", type=float, help="shape ratio sigma/mu")
    gauss.add_argument("--mu", type=float, help="mean (with --sigma, instead of --ratio)")
    gauss.add_argument("--sigma", type=float, help="standard deviation")

    parser = argparse.ArgumentParser(
        prog="paretorule",
        description="Cause/effect fractions for the Gaussian and Pareto models of the 80/20 rule.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    sp = sub.add_parser("point", parents=[common, gauss], help="evaluate one rule point")
    sp.add_argument("--t", type=float, help="normalized threshold X/sigma")
    sp.add_argument("--X", type=float, help="absolute threshold deviation from mu (needs --sigma)")
    sp.add_argument("--alpha", type=float, help="Pareto index")
    sp.add_argument("--A", type=float, help="Pareto threshold (absolute, >= --x-min)")
    sp.add_argument("--x-min", type=float, default=1.0, help="Pareto minimum value (default 1)")
    sp.add_argument("--i-cause", type=float, help="Pareto cause fraction instead of --A")
    sp.set_defaults(func=cmd_point)

    sp = sub.add_parser("fit-ratio", parents=[common], help="sigma/mu through a rule point")
    sp.add_argument("--i-cause", type=float, required=True)
    sp.add_argument("--i-effect", type=float, required=True)
    sp.set_defaults(func=cmd_fit_ratio)

    sp = sub.add_parser("fit-alpha", parents=[common], help="Pareto index through a rule point")
    sp.add_argument("--i-cause", type=float, required=True)
    sp.add_argument("--i-effect", type=float, required=True)
    sp.add_argument("--iterate", type=int, default=0, metavar="N", help="list iterated rules n=1..N")
    sp.set_defaults(func=cmd_fit_alpha)

    sp = sub.add_parser("table", parents=[common, gauss], help="named rule table")
    sp.add_argument("--t", type=_floats, help="comma-separated normalized thresholds")
    sp.add_argument("--targets", type=_floats, help="comma-separated cause fractions")
    sp.add_argument("--X", type=_floats, help="comma-separated absolute thresholds (needs --sigma)")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("curve", parents=[common], help="effect-vs-cause curves for several ratios")
    sp.add_argument("--ratio", type=_floats, help="comma-separated ratios (default 0.25,0.5,1,2,4)")
    sp.add_argument("--t-min", type=float, default=curves.FIG2_T_RANGE[0])
    sp.add_argument("--t-max", type=float, default=curves.FIG2_T_RANGE[1])
    sp.add_argument("--steps", type=int, default=curves.FIG2_STEPS)
    sp.add_argument("--axes", choices=("fraction", "threshold"), default="fraction",
                    help="plot I_effect vs I_cause, or both fractions vs threshold")
    sp.add_argument("--marker", type=_pair, default=(0.2, 0.8), help="marked point (default 0.2,0.8)")
    sp.add_argument("--no-marker", action="store_true")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("profile", parents=[common], help="density f(x) and x f(x)")
    sp.add_argument("--mu", type=float, default=2.0)
    sp.add_argument("--sigma", type=float, default=1.0)
    sp.add_argument("--x-min", type=float)
    sp.add_argument("--x-max", type=float)
    sp.add_argument("--steps", type=int, default=401)
    sp.add_argument("--shade-t", type=float, help="shade the tail above mu + t*sigma")
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("compare", parents=[common], help="Gaussian vs Pareto curves")
    sp.add_argument("--ratio", type=float, default=2.0)
    sp.add_argument("--alpha", type=float, default=curves.ALPHA_80_20)
    sp.add_argument("--cause-min", type=float, default=curves.COMPARE_CAUSE_MIN)
    sp.add_argument("--steps", type=int, default=401)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("mc-check", parents=[common], help="Monte-Carlo cross-check of a rule point")
    sp.add_argument("--ratio", type=float, required=True)
    sp.add_argument("--t", type=float, required=True)
    sp.add_argument("--n", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_mc_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 1 or args.precision > 17:
        parser.error("--precision must be between 1 and 17")
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: usage: {exc}", file=sys.stderr)
        return 2
    except DegenerateFitError as exc:
        print(f"error: degenerate: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: domain: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"error: convergence: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
