"""Search over (t, j) for the point where the constraint g = 0 is met.

For each time parameter t = n+1..n+s_max (ascending) the kriging matrix is
factored once, every target j = n+1..j_max is solved against that single
factorization, and the first (t, j) in lexicographic order whose
constraint value satisfies ``|g| <= epsilon`` (plus, by default,
non-negative variance terms) is accepted. The estimate there is the
limiting ("classic") value of the weighted mean.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import SingularSystem
from .estimator import MeanEstimate, Z95
from .kriging import PIVOT_TOL, Factorization
from .model import CorrelationModel, build_matrix, build_targets


@dataclass(frozen=True)
class ScanConfig:
    s_max: int = 100
    j_max: int | None = None  # default n + 300
    epsilon: float = 1e-4
    require_nonneg_variance: bool = True
    sign_change_fallback: bool = False
    pivot_tol: float = PIVOT_TOL
    workers: int = 1

    def resolved_j_max(self, n):
        return n + 300 if self.j_max is None else self.j_max

    def validate(self, n):
        if self.s_max < 1:
            raise ValueError("s_max must be >= 1")
        if self.resolved_j_max(n) < n + 1:
            raise ValueError(f"j_max must be >= n+1 = {n + 1}")
        if self.epsilon < 0 or math.isnan(self.epsilon):
            raise ValueError("epsilon must be non-negative")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


class TraceRecord(NamedTuple):
    t: int
    j: int
    g: float
    m_hat: float
    variance: float
    ci_low: float
    ci_high: float


class Accepted(NamedTuple):
    t: int
    j: int
    estimate: MeanEstimate


@dataclass
class ScanResult:
    n: int
    theta: float
    config: ScanConfig
    accepted: Accepted | None
    trace: list = field(repr=False)
    values: tuple = field(default=(), repr=False)
    labels: tuple | None = field(default=None, repr=False)

    @property
    def classic_value(self):
        return self.accepted.estimate.m_hat if self.accepted else math.nan

    def rows_at(self, t):
        return [r for r in self.trace if r.t == t]


@dataclass(frozen=True, eq=False)
class _Block:
    """Everything computed at one t, for all j at once."""

    t: int
    js: np.ndarray
    g: np.ndarray
    mu: np.ndarray
    wr: np.ndarray
    m_hat: np.ndarray
    sigma2: np.ndarray
    variance: np.ndarray
    weights: np.ndarray  # (n, len(js))
    targets: np.ndarray  # (n+1, len(js))


def _solve_block(n, theta, t, js, pivot_tol):
    model = CorrelationModel(theta, t)
    try:
        fac = Factorization(build_matrix(n, model), pivot_tol, t=t)
    except SingularSystem as exc:
        raise exc.with_t(t) from None
    b = build_targets(n, js, model)
    x = fac.solve_many(b)
    w = x[:n]
    mu = x[n]
    wr = np.einsum("ij,ij->j", w, b[:n])
    return fac, b, w, mu, wr


def g_profile(n, theta, t, j_range, pivot_tol=PIVOT_TOL):
    """Constraint value g(j) at fixed t; independent of the data values."""
    js = np.asarray(list(j_range), dtype=np.int64)
    _, _, _, mu, wr = _solve_block(n, theta, t, js, pivot_tol)
    return [(int(j), float(g)) for j, g in zip(js, wr + mu)]


def _evaluate(v, theta, t, js, pivot_tol):
    n = len(v)
    _, b, w, mu, wr = _solve_block(n, theta, t, js, pivot_tol)
    m_hat = v @ w
    sigma2 = (v * v) @ w - m_hat * m_hat
    variance = -sigma2 * (wr - mu)
    return _Block(t, js, wr + mu, mu, wr, m_hat, sigma2, variance, w, b)


def _ok_variance(block, cfg):
    if not cfg.require_nonneg_variance:
        return np.ones(len(block.g), dtype=bool)
    return (block.variance >= 0.0) & (block.sigma2 >= 0.0)


def _find_hit(block, cfg):
    """Index into ``block.js`` to accept and the last visited index, or (None, None).

    With ``sign_change_fallback`` a sign flip between j-1 and j also
    counts; the endpoint with the smaller |g| is accepted if its variance
    terms pass.
    """
    g = block.g
    ok = _ok_variance(block, cfg)
    hit = (np.abs(g) <= cfg.epsilon) & ok
    pick = np.arange(len(g))
    if cfg.sign_change_fallback and len(g) > 1:
        flip = np.zeros(len(g), dtype=bool)
        flip[1:] = g[:-1] * g[1:] < 0.0
        pick[1:] -= np.abs(g[:-1]) <= np.abs(g[1:])
        flip &= ok[pick]
        stop = hit | flip
    else:
        stop = hit
    idx = np.flatnonzero(stop)
    if idx.size == 0:
        return None, None
    k = int(idx[0])
    return (k, k) if hit[k] else (int(pick[k]), k)


def _estimate(block, k):
    variance = float(block.variance[k])
    sigma2 = float(block.sigma2[k])
    m_hat = float(block.m_hat[k])
    valid = variance >= 0.0 and sigma2 >= 0.0
    if valid:
        half = Z95 * math.sqrt(variance)
        lo, hi = m_hat - half, m_hat + half
        problem = None
    else:
        lo = hi = math.nan
        problem = "NegativeSigma2Hat" if sigma2 < 0 else "NegativeVarianceTerm"
    return MeanEstimate(
        m_hat, sigma2, variance, lo, hi, float(block.g[k]), block.t, int(block.js[k]), valid, problem
    )


def _records(block, stop):
    var = block.variance[:stop]
    m = block.m_hat[:stop]
    valid = (var >= 0.0) & (block.sigma2[:stop] >= 0.0)
    half = np.where(valid, Z95 * np.sqrt(np.where(valid, var, 0.0)), np.nan)
    cols = zip(block.js[:stop].tolist(), block.g[:stop].tolist(), m.tolist(), var.tolist(), (m - half).tolist(), (m + half).tolist())
    return [TraceRecord(block.t, *c) for c in cols]


def scan(ts, theta: float, cfg: ScanConfig | None = None) -> ScanResult:
    """Run the (t, j) search; see the module docstring for the order."""
    cfg = cfg or ScanConfig()
    v = ts.array() if hasattr(ts, "array") else np.asarray(ts, dtype=np.float64)
    n = len(v)
    cfg.validate(n)
    js = np.arange(n + 1, cfg.resolved_j_max(n) + 1, dtype=np.int64)
    ts_values = tuple(float(x) for x in v)
    labels = getattr(ts, "labels", None)
    t_values = list(range(n + 1, n + cfg.s_max + 1))

    def evaluate(t):
        return _evaluate(v, theta, t, js, cfg.pivot_tol)

    trace = []
    pool = ThreadPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        chunk = cfg.workers
        for start in range(0, len(t_values), chunk):
            batch = t_values[start : start + chunk]
            blocks = list(pool.map(evaluate, batch)) if pool else [evaluate(t) for t in batch]
            for block in blocks:
                k, last = _find_hit(block, cfg)
                if k is None:
                    trace.extend(_records(block, len(js)))
                    continue
                trace.extend(_records(block, last + 1))
                acc = Accepted(block.t, int(block.js[k]), _estimate(block, k))
                return ScanResult(n, theta, cfg, acc, trace, ts_values, labels)
    finally:
        if pool:
            pool.shutdown()
    return ScanResult(n, theta, cfg, None, trace, ts_values, labels)
