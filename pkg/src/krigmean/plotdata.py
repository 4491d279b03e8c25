"""CSV series behind the estimator-vs-j chart, and a reader for them.

Four files are written to the output directory:

``series.csv``     index,value[,date]       observed series
``estimator.csv``  j,m_hat,ci_low,ci_high,g  per-j estimate at the accepted t
``classic.csv``    j,value                   accepted estimate for j = n+1..j_max
``meta.csv``       n,theta,t_final,j_final,epsilon

Floats are written with 10 significant digits.
"""
from __future__ import annotations

import csv
from pathlib import Path

FILES = ("series.csv", "estimator.csv", "classic.csv", "meta.csv")
HEADERS = {
    "series.csv": ["index", "value"],
    "estimator.csv": ["j", "m_hat", "ci_low", "ci_high", "g"],
    "classic.csv": ["j", "value"],
    "meta.csv": ["n", "theta", "t_final", "j_final", "epsilon"],
}


def fmt(x):
    if x is None:
        return ""
    if isinstance(x, (int,)) and not isinstance(x, bool):
        return str(x)
    return f"{float(x):.10g}"


def _write(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([c if isinstance(c, str) else fmt(c) for c in row])


def emit_plot_data(result, out_dir):
    """Write the four CSVs for ``result`` (a ``ScanResult``); returns their paths.

    Without an accepted point the estimator rows come from the last t that
    was scanned and ``classic.csv`` carries only its header.
    """
    if not result.trace:
        raise ValueError("scan result has an empty trace")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    n = result.n
    acc = result.accepted

    header = list(HEADERS["series.csv"])
    if result.labels is not None:
        header.append("date")
        series_rows = [(i, v, lab) for i, (v, lab) in enumerate(zip(result.values, result.labels), start=1)]
    else:
        series_rows = [(i, v) for i, v in enumerate(result.values, start=1)]
    _write(out / "series.csv", header, series_rows)

    t_plot = acc.t if acc else result.trace[-1].t
    est_rows = [(r.j, r.m_hat, r.ci_low, r.ci_high, r.g) for r in result.trace if r.t == t_plot]
    _write(out / "estimator.csv", HEADERS["estimator.csv"], est_rows)

    j_max = result.config.resolved_j_max(n)
    classic_rows = [(j, acc.estimate.m_hat) for j in range(n + 1, j_max + 1)] if acc else []
    _write(out / "classic.csv", HEADERS["classic.csv"], classic_rows)

    meta = (n, result.theta, acc.t if acc else None, acc.j if acc else None, result.config.epsilon)
    _write(out / "meta.csv", HEADERS["meta.csv"], [meta])
    return [out / name for name in FILES]


def _cell(text):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def read_plot_csv(path):
    """Read one of the emitted files; returns ``(header, rows)`` with typed cells."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[_cell(c) for c in row] for row in reader]
    return header, rows
