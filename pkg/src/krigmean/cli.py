"""Command-line interface.

Exit codes: 0 success, 2 usage/config error, 3 data error (unreadable
or malformed input), 4 numerical error (degenerate variogram, singular
system, failed fit), 5 no root found by the (t, j) scan.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import empirical, fit, plotdata
from .config import build_config
from .errors import DataError, NumericalError
from .ingest import load_series
from .montecarlo import SyntheticSpec, coverage_experiment
from .pipeline import fit_theta, run

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERICAL = 4
EXIT_NO_ROOT = 5


def _load(cfg):
    if not cfg.input:
        raise ValueError("no input file given (--input or 'input' in the config)")
    ts = load_series(cfg.input, cfg.format)
    start, n = cfg.window
    return ts.window(start, n)


def _write_hv(path, values):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("h,value\n")
        for h, v in enumerate(values):
            fh.write(f"{h},{plotdata.fmt(float(v))}\n")


def cmd_variogram(cfg):
    ts = _load(cfg)
    vg = empirical.semivariogram(ts)
    d = empirical.monotone_cutoff(vg)
    _write_hv(Path(cfg.out_dir) / "variogram.csv", vg.gamma)
    print(f"d={d} sigma2={plotdata.fmt(float(vg.gamma[d]))}")
    return EXIT_OK


def cmd_correlogram(cfg):
    ts = _load(cfg)
    _, d, c1, c2 = empirical.correlograms(ts)
    out = Path(cfg.out_dir)
    _write_hv(out / "correlogram_c1.csv", c1.rho_abs)
    _write_hv(out / "correlogram_c2.csv", c2.rho_abs)
    print(f"d={d} sigma2={plotdata.fmt(c1.sigma2_hat)} d_c2={c2.d}")
    return EXIT_OK


def cmd_fit(cfg):
    ts = _load(cfg)
    if cfg.pooling == "separate":
        _, d, c1, c2 = empirical.correlograms(ts)
        fc = cfg.fit_config()
        report = {"d": d, "pooling": "separate"}
        for name, c in (("c1", c1), ("c2", c2)):
            res = fit.lm_fit_theta(c.points(), ts.n, fc.init_theta, fc.tol, fc.max_iter)
            report[name] = res.to_dict()
    else:
        _, d, _, _, res = fit_theta(ts, cfg.fit_config())
        report = {"d": d, "pooling": cfg.pooling, **res.to_dict()}
    print(json.dumps(report, sort_keys=True))
    return EXIT_OK


def cmd_estimate(cfg):
    if cfg.pooling == "separate":
        raise ValueError("pooling 'separate' only applies to the fit command")
    ts = _load(cfg)
    res = run(ts, cfg.pipeline_config())
    out = Path(cfg.out_dir)
    plotdata.emit_plot_data(res.scan, out)
    acc = res.scan.accepted
    payload = {
        "label": cfg.label,
        "n": ts.n,
        "d": res.d,
        "theta": res.fit.theta,
        "fit_converged": res.fit.converged,
        "epsilon": cfg.epsilon,
        "accepted": acc is not None,
        "estimate": acc.estimate.to_dict() if acc else None,
    }
    (out / "estimate.json").write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    if acc is None:
        print(
            f"no root: |g| <= {cfg.epsilon:g} not reached for t in {ts.n + 1}..{ts.n + cfg.s_max}",
            file=sys.stderr,
        )
        return EXIT_NO_ROOT
    est = acc.estimate
    print(f"{cfg.label}, {ts.n}, {res.fit.theta:.5f}, {acc.t}, {acc.j}, {est.m_hat:.2f}")
    return EXIT_OK


def cmd_coverage(cfg, records_csv=None):
    spec = SyntheticSpec(cfg.n, cfg.mean, cfg.sigma2, cfg.corr_model, cfg.a, cfg.seed)
    report = coverage_experiment(spec, cfg.trials, cfg.pipeline_config(), workers=cfg.workers)
    print(report.to_json())
    if records_csv:
        Path(records_csv).write_text(report.records_csv(), encoding="utf-8")
    return EXIT_OK


COMMANDS = {
    "variogram": cmd_variogram,
    "correlogram": cmd_correlogram,
    "fit": cmd_fit,
    "estimate": cmd_estimate,
    "coverage": cmd_coverage,
}

# flag name -> config key; every config key is overridable
FLAGS = [
    ("--input", "input"), ("--format", "format"), ("--window", "window"), ("--label", "label"),
    ("--pooling", "pooling"), ("--init-theta", "init_theta"), ("--tol", "tol"),
    ("--max-iter", "max_iter"), ("--s-max", "s_max"), ("--j-max", "j_max"),
    ("--epsilon", "epsilon"), ("--require-nonneg-variance", "require_nonneg_variance"),
    ("--sign-change-fallback", "sign_change_fallback"), ("--pivot-tol", "pivot_tol"),
    ("--workers", "workers"), ("--out-dir", "out_dir"), ("--n", "n"), ("--mean", "mean"),
    ("--sigma2", "sigma2"), ("--corr-model", "corr_model"), ("--a", "a"), ("--seed", "seed"),
    ("--trials", "trials"),
]


def build_parser():
    parser = argparse.ArgumentParser(prog="krigmean", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input_pos", nargs="?", metavar="INPUT", help="input file (same as --input)")
        p.add_argument("--config", help="key=value config file")
        for flag, key in FLAGS:
            p.add_argument(flag, dest=key, default=None, metavar=key.upper())
        if name == "coverage":
            p.add_argument("--records-csv", help="also write per-trial records")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {key: getattr(args, key) for _, key in FLAGS}
    if args.input_pos:
        overrides["input"] = args.input_pos
    try:
        cfg = build_config(args.config, overrides)
        if args.command == "coverage":
            return cmd_coverage(cfg, args.records_csv)
        return COMMANDS[args.command](cfg)
    except (DataError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericalError as exc:
        print(f"numerical error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
