"""The negative correlation model and the bordered kriging system."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CorrelationModel:
    """rho(0) = 1 and rho(delta) = -t ** (-theta * (delta/t)**2) for delta > 0."""

    theta: float
    t: int

    def __post_init__(self):
        if self.t < 2:
            raise ValueError("time parameter t must be >= 2")
        if not self.theta > 0.0:
            raise ValueError("theta must be positive")


def rho(delta, model: CorrelationModel):
    """Correlation at integer lag(s) ``delta``; scalar in, scalar out."""
    d = np.asarray(delta, dtype=np.float64)
    if np.any(d < 0):
        raise ValueError("lag must be non-negative")
    t = float(model.t)
    out = np.where(d == 0.0, 1.0, -np.exp(-model.theta * (d / t) ** 2 * math.log(t)))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True, eq=False)
class KrigingSystem:
    matrix: np.ndarray  # (n+1, n+1)
    target: np.ndarray  # (n+1,)
    n: int
    j: int


def build_matrix(n: int, model: CorrelationModel) -> np.ndarray:
    """Bordered matrix [[rho(|i-k|), 1], [1, 0]], i, k = 1..n."""
    idx = np.arange(n)
    a = np.ones((n + 1, n + 1))
    a[:n, :n] = rho(np.abs(idx[:, None] - idx[None, :]), model)
    a[n, n] = 0.0
    return a


def build_targets(n: int, js, model: CorrelationModel) -> np.ndarray:
    """Right-hand sides, one column per target index j: [rho(|i-j|); 1]."""
    js = np.atleast_1d(np.asarray(js, dtype=np.int64))
    i = np.arange(1, n + 1)
    b = np.ones((n + 1, len(js)))
    b[:n] = rho(np.abs(i[:, None] - js[None, :]), model)
    return b


def build_system(n: int, j: int, model: CorrelationModel) -> KrigingSystem:
    if n < 1:
        raise ValueError("n must be >= 1")
    matrix = build_matrix(n, model)
    target = build_targets(n, [j], model)[:, 0]
    matrix.setflags(write=False)
    target.setflags(write=False)
    return KrigingSystem(matrix, target, n, j)
