"""Command line front end.

Subcommands:

* ``verify-limit``  run the configured convergence sweep and write a
  verdict report (exit 0 when every gated cell passes, 1 otherwise).
* ``simulate``      draw a few normalized shot noise paths from the
  configured model and write them as CSV/JSON/SVG.
* ``moments``       print closed-form moments of the nondecreasing
  limit integral as CSV.
* ``selfsim``       Kolmogorov-Smirnov check of the H-self-similarity
  of a limit integral's marginals.
* ``stable-check``  characteristic-function sanity check of the stable
  sampler.

All outputs are deterministic functions of the configuration and seed:
no timestamps, stable key order, fixed float formatting.  Structural
errors print a one-line JSON object on stderr and exit with code 2.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .config import ConfigError, ExperimentConfig
from .limits import (
    StableSpec,
    inverse_integral_marginals,
    sample_stable_unit,
    stable_integral_marginals,
)
from .oracle import hurst_exponent, stable_log_cf, z_moment
from .renewal import build_case_spec, sample_renewal_path
from .response import TwoSidedResponse
from .shotnoise import normalized_process
from .stats import ConvergenceReport, convergence_sweep, ecf_test, ks_two_sample
from .streams import substream
from .svgplot import line_plot, save_svg

SCHEMA_VERSION = 1


def _fail(err) -> int:
    sys.stderr.write(json.dumps({"error": str(err)}) + "\n")
    return 2


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return format(v, ".10g")
    return str(v)


def _dump_json(payload: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _load_config(args) -> ExperimentConfig:
    cfg = ExperimentConfig.from_toml(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
        cfg.__post_init__()
    if args.threads is not None:
        cfg.threads = args.threads
        cfg.__post_init__()
    if args.out is not None:
        cfg.output_dir = args.out
    if args.format:
        cfg.output_formats = tuple(dict.fromkeys(args.format))
        cfg.__post_init__()
    os.makedirs(cfg.output_dir, exist_ok=True)
    return cfg


def _report_csv(report: ConvergenceReport) -> str:
    lines = ["# config: " + json.dumps(report.config, sort_keys=True)]
    lines.append("t,u,n,ks,ks_p,ecf_se,moment_z1,moment_z2,passed,informational")
    for r in report.rows:
        lines.append(",".join(_fmt(v) for v in (
            r.t, r.u, r.n, r.ks, r.ks_p, r.ecf_se,
            r.moment_z1, r.moment_z2, r.passed, r.informational)))
    return "\n".join(lines) + "\n"


def _report_svg(report: ConvergenceReport) -> str:
    by_u: dict[float, list] = {}
    for r in report.rows:
        by_u.setdefault(r.u, []).append(r)
    series = []
    for u, rows in sorted(by_u.items()):
        ts = [math.log10(r.t) for r in rows]
        ks = [r.ks for r in rows]
        series.append((f"u={_fmt(u)}", ts, ks))
    return line_plot(series, title="KS distance vs log10 t")


def _cmd_verify_limit(args) -> int:
    cfg = _load_config(args)
    report = convergence_sweep(cfg)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify-limit",
        "case": report.case,
        "config": report.config,
        "overall_pass": report.overall_pass,
        "rows": [
            {
                "t": r.t, "u": r.u, "n": r.n,
                "ks": _json_float(r.ks), "ks_p": _json_float(r.ks_p),
                "ecf_se": _json_float(r.ecf_se),
                "moment_z1": _json_float(r.moment_z1),
                "moment_z2": _json_float(r.moment_z2),
                "passed": r.passed, "informational": r.informational,
            }
            for r in report.rows
        ],
    }
    out = cfg.output_dir
    if "json" in cfg.output_formats:
        _dump_json(payload, os.path.join(out, "report.json"))
    if "csv" in cfg.output_formats:
        with open(os.path.join(out, "report.csv"), "w", encoding="utf-8") as fh:
            fh.write(_report_csv(report))
    if "svg" in cfg.output_formats:
        save_svg(_report_svg(report), os.path.join(out, "report.svg"))
    status = "PASS" if report.overall_pass else "FAIL"
    sys.stdout.write(f"verify-limit {report.case}: {status} "
                     f"({len(report.rows)} cells)\n")
    return 0 if report.overall_pass else 1


def _json_float(v: float):
    if isinstance(v, float) and math.isnan(v):
        return None
    return v


def _cmd_simulate(args) -> int:
    cfg = _load_config(args)
    law = cfg.law()
    h = cfg.response()
    spec = build_case_spec(law, h)
    t = cfg.t_ladder[-1]
    t_index = len(cfg.t_ladder) - 1
    u_max = cfg.u_points[-1]
    horizon = u_max * t
    if isinstance(h, TwoSidedResponse):
        horizon += h.tail_cutoff
    paths = []
    for r in range(args.paths):
        rng = substream(cfg.seed, 1, t_index, r)
        path = sample_renewal_path(law, horizon, rng)
        norm = normalized_process(path, h, spec, t, u_max, cfg.grid_points)
        paths.append(norm.values)
    grid = np.linspace(0.0, u_max, cfg.grid_points)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "simulate",
        "case": spec.case,
        "config": cfg.resolved(),
        "t": t,
        "u_grid": [float(x) for x in grid],
        "paths": [[float(x) for x in p] for p in paths],
    }
    out = cfg.output_dir
    if "json" in cfg.output_formats:
        _dump_json(payload, os.path.join(out, "paths.json"))
    if "csv" in cfg.output_formats:
        lines = ["# config: " + json.dumps(cfg.resolved(), sort_keys=True)]
        lines.append("u," + ",".join(f"path_{i}" for i in range(len(paths))))
        for j, u in enumerate(grid):
            lines.append(",".join([_fmt(float(u))] + [_fmt(float(p[j])) for p in paths]))
        with open(os.path.join(out, "paths.csv"), "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    if "svg" in cfg.output_formats:
        series = [(f"path {i}", grid, p) for i, p in enumerate(paths)]
        save_svg(line_plot(series, title=f"normalized paths, t={_fmt(t)}"),
                 os.path.join(out, "paths.svg"))
    sys.stdout.write(f"simulate {spec.case}: wrote {len(paths)} paths "
                     f"(t={_fmt(t)})\n")
    return 0


def _cmd_moments(args) -> int:
    if args.kmax < 1:
        raise ValueError("kmax must be at least 1")
    lines = ["k,moment"]
    for k in range(1, args.kmax + 1):
        lines.append(f"{k},{_fmt(z_moment(args.alpha, args.beta, args.u, k))}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0


def _cmd_selfsim(args) -> int:
    factor = args.factor
    if factor <= 0.0 or factor == 1.0:
        raise ValueError("factor must be positive and different from 1")
    if args.kind == "y":
        case = "a1" if args.alpha == 2.0 else "a3"
        h_exp = hurst_exponent(case, args.alpha, args.beta)
        base = stable_integral_marginals(args.alpha, args.beta, args.u,
                                         args.grid, args.paths,
                                         substream(args.seed, 4, 0, 0))
        scaled = stable_integral_marginals(args.alpha, args.beta, factor * args.u,
                                           args.grid, args.paths,
                                           substream(args.seed, 4, 1, 0))
    else:
        h_exp = hurst_exponent("a4", args.alpha, args.beta)
        base = inverse_integral_marginals(args.alpha, args.beta, args.u,
                                          args.grid, args.paths,
                                          substream(args.seed, 4, 0, 0))
        scaled = inverse_integral_marginals(args.alpha, args.beta, factor * args.u,
                                            args.grid, args.paths,
                                            substream(args.seed, 4, 1, 0))
    ks, p = ks_two_sample(scaled / factor**h_exp, base)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "selfsim",
        "alpha": args.alpha, "beta": args.beta, "u": args.u,
        "factor": factor, "hurst": h_exp, "paths": args.paths,
        "ks": ks, "p": p, "pass": bool(p >= 0.01),
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return 0 if p >= 0.01 else 1


def _cmd_stable_check(args) -> int:
    alphas = [float(a) for a in args.alpha.split(",")]
    z_grid = [float(z) for z in args.z.split(",")]
    results = []
    for i, a in enumerate(alphas):
        rng = substream(args.seed, 3, i, 0)
        draws = sample_stable_unit(StableSpec(a, "spectrally_negative"), rng,
                                   size=args.n)
        dev = ecf_test(draws, lambda z: stable_log_cf(a, z), z_grid=z_grid)
        results.append({"alpha": a, "n": args.n, "max_se_dev": dev,
                        "pass": bool(dev <= 5.0)})
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "stable-check",
        "z_grid": z_grid,
        "results": results,
        "overall_pass": all(r["pass"] for r in results),
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return 0 if payload["overall_pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shotnoise-lab",
        description="Monte Carlo laboratory for renewal shot noise limits")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="TOML experiment file")
    common.add_argument("--seed", type=int, default=None,
                        help="override the config seed")
    common.add_argument("--out", default=None, help="output directory")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: config value)")
    common.add_argument("--format", action="append", default=None,
                        choices=("json", "csv", "svg"),
                        help="output formats (repeatable)")

    p = sub.add_parser("verify-limit", parents=[common],
                       help="run the convergence sweep and gate the verdicts")
    p.set_defaults(func=_cmd_verify_limit)

    p = sub.add_parser("simulate", parents=[common],
                       help="write a few normalized sample paths")
    p.add_argument("--paths", type=int, default=4)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("moments", help="closed-form limit moments as CSV")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--u", type=float, default=1.0)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("selfsim", help="self-similarity KS check of a limit integral")
    p.add_argument("--kind", choices=("y", "z"), default="y")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--u", type=float, default=1.0)
    p.add_argument("--factor", type=float, default=2.0)
    p.add_argument("--paths", type=int, default=20000)
    p.add_argument("--grid", type=int, default=257)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=_cmd_selfsim)

    p = sub.add_parser("stable-check", help="ECF check of the stable sampler")
    p.add_argument("--alpha", default="1.2,1.5,1.8",
                   help="comma separated indices in [1, 2]")
    p.add_argument("--n", type=int, default=200000)
    p.add_argument("--z", default="0.5,1,2", help="comma separated CF arguments")
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=_cmd_stable_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        return _fail(err)
    except (ValueError, RuntimeError, OSError) as err:
        return _fail(err)


if __name__ == "__main__":
    sys.exit(main())
