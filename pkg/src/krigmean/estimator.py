"""Constraint value, constrained variance and the mean estimate with its CI."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

Z95 = 1.96

NEGATIVE_VARIANCE = "NegativeVarianceTerm"
NEGATIVE_SIGMA2 = "NegativeSigma2Hat"


@dataclass(frozen=True)
class MeanEstimate:
    """Weighted mean with its constrained variance.

    When the variance term or the weighted sample variance is negative the
    interval cannot be formed: ``ci_valid`` is False, ``ci_low``/``ci_high``
    are NaN and ``problem`` names the failing term. ``m_hat`` stays valid.
    """

    m_hat: float
    sigma2_hat: float
    variance: float
    ci_low: float
    ci_high: float
    constraint_g: float
    t: int | None = None
    j: int | None = None
    ci_valid: bool = True
    problem: str | None = None

    def to_dict(self):
        return {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in asdict(self).items()}


def _wr(sol, target_rho):
    return float(np.dot(sol.weights, np.asarray(target_rho, dtype=np.float64)))


def constraint_value(sol, target_rho) -> float:
    """g = sum_i w_i rho_ij + mu; the constraint is g = 0."""
    return _wr(sol, target_rho) + sol.mu


def estimation_variance(sol, target_rho, sigma2) -> float:
    """-sigma2 * (sum_i w_i rho_ij - mu). Not clamped; may be negative."""
    if sigma2 < 0:
        raise ValueError("sigma2 must be non-negative")
    return -sigma2 * (_wr(sol, target_rho) - sol.mu)


def weighted_moments(weights, values):
    """(sum w v, sum w v^2 - (sum w v)^2)."""
    w = np.asarray(weights, dtype=np.float64)
    v = np.asarray(values, dtype=np.float64)
    m = float(w @ v)
    return m, float(w @ (v * v)) - m * m


def mean_estimate(sol, ts, target_rho) -> MeanEstimate:
    v = ts.array() if hasattr(ts, "array") else np.asarray(ts, dtype=np.float64)
    if len(v) != sol.n:
        raise ValueError(f"series length {len(v)} does not match {sol.n} weights")
    m_hat, sigma2_hat = weighted_moments(sol.weights, v)
    g = constraint_value(sol, target_rho)
    variance = -sigma2_hat * (_wr(sol, target_rho) - sol.mu)

    problem = None
    if sigma2_hat < 0:
        problem = NEGATIVE_SIGMA2
    elif variance < 0:
        problem = NEGATIVE_VARIANCE
    if problem is None:
        half = Z95 * math.sqrt(variance)
        lo, hi = m_hat - half, m_hat + half
    else:
        lo = hi = math.nan
    return MeanEstimate(m_hat, sigma2_hat, variance, lo, hi, g, sol.t, sol.j, problem is None, problem)
