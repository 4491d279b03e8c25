"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are collected and shown in the pytest terminal summary.
"""
import math
import time

import numpy as np
import pytest

from krigmean import kernels
from krigmean.empirical import correlogram_c2, covariance_hat, semivariogram
from krigmean.estimator import estimation_variance, weighted_moments
from krigmean.fit import lm_fit_theta, log_domain_theta_oracle
from krigmean.ingest import TimeSeries
from krigmean.kriging import KrigingSolution, solve
from krigmean.model import CorrelationModel, build_system
from krigmean.montecarlo import SyntheticSpec, coverage_experiment, generate_series
from krigmean.pipeline import fit_theta
from krigmean.plotdata import FILES, HEADERS, emit_plot_data, read_plot_csv
from krigmean.scan import ScanConfig, scan
from oracles import brute_force_scan, cramer_solve, kriging_system

RESULTS = []


def report(name, ok, detail):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, detail


def best_time(fn, repeats=5):
    best = math.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def test_ac1_hand_oracle():
    ts = TimeSeries((1.0, 2.0, 4.0))

    def compute():
        return semivariogram(ts).gamma, covariance_hat(ts, 1), covariance_hat(ts, 0), correlogram_c2(ts, 1).rho_abs

    (gamma, c1, c0, rho2), elapsed = best_time(compute)
    err = max(
        np.max(np.abs(gamma - [0.0, 1.25, 4.5])),
        abs(c1 - 0.5),
        abs(c0 - 14 / 9),
        np.max(np.abs(rho2 - [1.0, 0.5 / (14 / 9)])),
    )
    report("AC1 semivariogram/covariance hand oracle", err <= 1e-12 and elapsed < 1e-3,
           f"max err {err:.1e} (tol 1e-12), runtime {elapsed * 1e3:.3f} ms (< 1 ms)")


def test_ac2_fit_oracle_equivalence():
    rng = np.random.default_rng(2)
    cases = [(float(rng.uniform(0.1, 5.0)), int(rng.choice([10, 100, 1000]))) for _ in range(50)]
    t0 = time.perf_counter()
    worst_true = worst_oracle = 0.0
    for theta0, n in cases:
        pts = [(h, n ** (-theta0 * (h / n) ** 2)) for h in range(1, max(3, n // 2))]
        theta = lm_fit_theta(pts, n).theta
        worst_true = max(worst_true, abs(theta - theta0))
        worst_oracle = max(worst_oracle, abs(theta - log_domain_theta_oracle(pts, n)))
    elapsed = time.perf_counter() - t0
    ok = worst_true <= 1e-6 and worst_oracle <= 1e-6 and elapsed < 1.0
    report("AC2 LM fit vs log-domain oracle", ok,
           f"|theta-theta0| {worst_true:.1e}, |LM-oracle| {worst_oracle:.1e} (tol 1e-6), runtime {elapsed:.3f} s (< 1 s)")


@pytest.mark.parametrize("backend_name", kernels.available_backends())
def test_ac3_kriging_vs_cramer(backend_name):
    with kernels.use_backend(backend_name):
        _ac3(backend_name)


def _ac3(backend_name):
    rng = np.random.default_rng(3)
    err_cramer = err_sum = err_exact = 0.0
    for n in range(1, 6):
        for _ in range(20):
            t = int(rng.integers(max(2, n + 1), n + 300))
            theta = float(rng.uniform(0.05, 5.0))
            j = int(rng.integers(n + 1, n + 400))
            sol = solve(build_system(n, j, CorrelationModel(theta, t)))
            ref = cramer_solve(*kriging_system(n, j, t, theta))
            err_cramer = max(err_cramer, float(np.max(np.abs(np.append(sol.weights, sol.mu) - ref))))
            err_sum = max(err_sum, abs(sol.weights.sum() - 1.0))
            i = int(rng.integers(1, n + 1))
            ex = solve(build_system(n, i, CorrelationModel(theta, t)))
            unit = np.zeros(n)
            unit[i - 1] = 1.0
            err_exact = max(err_exact, float(np.max(np.abs(ex.weights - unit))), abs(ex.mu))
    ok = err_cramer <= 1e-10 and err_sum <= 1e-10 and err_exact <= 1e-8
    report(f"AC3 kriging LU vs Cramer [{backend_name}]", ok,
           f"vs Cramer {err_cramer:.1e} (1e-10), weight sum {err_sum:.1e} (1e-10), exactness {err_exact:.1e} (1e-8)")


def test_ac4_constraint_algebra():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(1, 40))
        w = rng.normal(size=n)
        r = -rng.uniform(0, 1, size=n)
        sigma2 = float(rng.uniform(0, 10))
        mu = -float(w @ r)
        var = estimation_variance(KrigingSolution(w, mu, None), r, sigma2)
        worst = max(worst, abs(var - 2 * sigma2 * mu))
    report("AC4 variance = 2 sigma2 mu on constructed roots", worst <= 1e-12, f"max err {worst:.1e} (tol 1e-12)")


def test_ac5_scan_soundness():
    ts = generate_series(SyntheticSpec(30, 10.0, 1.0, "gaussian_decay", a=7.5, seed=0))
    n = ts.n
    theta = fit_theta(ts)[-1].theta
    ref = brute_force_scan(ts.array(), theta, 100, n + 300, 1e-4)
    t0 = time.perf_counter()
    res = scan(ts, theta, ScanConfig(s_max=100, j_max=n + 300, epsilon=1e-4))
    elapsed = time.perf_counter() - t0
    got = None if res.accepted is None else (res.accepted.t, res.accepted.j)
    want = None if ref is None else ref[:2]
    ok = ref is not None and got == want and elapsed < 30
    report("AC5 scan matches brute-force first hit", ok,
           f"scan {got} vs brute force {want} (n=30, theta={theta:.5f}), runtime {elapsed:.2f} s (< 30 s)")


def test_ac6_estimator_equivariance():
    rng = np.random.default_rng(6)
    shift_m = shift_s = scale_m = scale_s = 0.0
    for _ in range(300):
        n = int(rng.integers(2, 60))
        w = rng.normal(size=n)
        w[-1] = 1.0 - w[:-1].sum()
        v = rng.normal(size=n)
        c = float(rng.uniform(-100, 100))
        s = float(rng.uniform(-10, 10))
        m0, s0 = weighted_moments(w, v)
        m1, s1 = weighted_moments(w, v + c)
        m2, s2 = weighted_moments(w, s * v)
        shift_m = max(shift_m, abs(m1 - (m0 + c)))
        shift_s = max(shift_s, abs(s1 - s0) / max(1.0, abs(s0)))
        scale_m = max(scale_m, abs(m2 - s * m0))
        scale_s = max(scale_s, abs(s2 - s * s * s0) / max(1.0, abs(s * s * s0)))
    worst = max(shift_m, shift_s, scale_m, scale_s)
    report("AC6 shift/scale equivariance", worst <= 1e-10,
           f"shift m {shift_m:.1e}, shift s2 {shift_s:.1e}, scale m {scale_m:.1e}, scale s2 {scale_s:.1e} (tol 1e-10)")


def test_ac7_monte_carlo_white_noise():
    spec = SyntheticSpec(30, 0.0, 1.0, "white_noise", seed=7)
    t0 = time.perf_counter()
    a = coverage_experiment(spec, 500)
    elapsed = time.perf_counter() - t0
    b = coverage_experiment(spec, 500)
    bound = 3 * a.rmse / math.sqrt(500) if a.rmse is not None else math.nan
    reproducible = a.to_json() == b.to_json() and a.records_csv() == b.records_csv()
    ok = a.bias is not None and abs(a.bias) <= bound and reproducible and elapsed < 120
    report("AC7 Monte Carlo white-noise bias", ok,
           f"|bias| {abs(a.bias):.4f} <= {bound:.4f} over {a.accepted}/500 accepted, "
           f"byte-reproducible={reproducible}, runtime {elapsed:.1f} s (< 120 s)")


def test_ac8_plot_data_contract(tmp_path):
    ts = generate_series(SyntheticSpec(30, 10.0, 1.0, "gaussian_decay", a=7.5, seed=0))
    res = scan(ts, fit_theta(ts)[-1].theta)
    emit_plot_data(res, tmp_path)
    n, acc = res.n, res.accepted
    expected_rows = {"series.csv": n, "estimator.csv": acc.j - n, "classic.csv": 300, "meta.csv": 1}
    problems = []
    for name in FILES:
        header, rows = read_plot_csv(tmp_path / name)
        if header != HEADERS[name]:
            problems.append(f"{name} header {header}")
        if len(rows) != expected_rows[name]:
            problems.append(f"{name} rows {len(rows)} != {expected_rows[name]}")
    _, meta = read_plot_csv(tmp_path / "meta.csv")
    if meta[0][2:4] != [acc.t, acc.j]:
        problems.append(f"meta {meta[0]}")
    report("AC8 plot-data CSV contract", not problems, "; ".join(problems) or "4 files, headers and row counts exact")
