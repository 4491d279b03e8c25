"""Experimental semivariogram, lagged covariance and the two correlograms."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateVariogram, LagOutOfRange


@dataclass(frozen=True, eq=False)
class EmpiricalVariogram:
    gamma: np.ndarray  # gamma_hat(h), h = 0..n-1

    @property
    def n(self):
        return len(self.gamma)


@dataclass(frozen=True, eq=False)
class Correlogram:
    kind: str  # "C1" (from the variogram) or "C2" (covariance ratio)
    rho_abs: np.ndarray  # h = 0..d
    d: int
    sigma2_hat: float | None = None  # C1 only: gamma_hat(d)

    def points(self):
        """(h, value) pairs for h = 1..d, the lags that carry information."""
        return [(h, float(self.rho_abs[h])) for h in range(1, self.d + 1)]


def _values(ts):
    return ts.array() if hasattr(ts, "array") else np.asarray(ts, dtype=np.float64)


def semivariogram(ts) -> EmpiricalVariogram:
    """gamma_hat(h) = 1/(2(n-h)) * sum_{j=1}^{n-h} (v_j - v_{j+h})^2."""
    gamma = kernels.semivariogram(_values(ts))
    gamma.setflags(write=False)
    return EmpiricalVariogram(gamma)


def monotone_cutoff(vg: EmpiricalVariogram) -> int:
    """Largest d with gamma_hat non-decreasing on 0..d.

    Ties count as non-decreasing; the scan stops at the first strict
    descent and returns n-1 when there is none.
    """
    g = np.asarray(vg.gamma if isinstance(vg, EmpiricalVariogram) else vg, dtype=np.float64)
    if len(g) < 2 or not g[1] > 0.0:
        raise DegenerateVariogram("gamma_hat(1) must be > 0 (constant series?)")
    descent = np.flatnonzero(g[2:] < g[1:-1])
    return int(descent[0] + 1) if descent.size else len(g) - 1


def correlogram_c1(vg: EmpiricalVariogram, d: int) -> Correlogram:
    g = np.asarray(vg.gamma if isinstance(vg, EmpiricalVariogram) else vg, dtype=np.float64)
    if not 1 <= d < len(g):
        raise LagOutOfRange(f"cutoff {d} outside 1..{len(g) - 1}")
    sigma2 = float(g[d])
    if not sigma2 > 0.0:
        raise DegenerateVariogram("gamma_hat(d) must be > 0")
    rho = 1.0 - g[: d + 1] / sigma2
    rho[0] = 1.0
    rho[d] = 0.0
    return Correlogram("C1", rho, d, sigma2)


def covariance_hat(ts, h: int) -> float:
    v = _values(ts)
    n = len(v)
    if not 0 <= h <= n - 2:
        raise LagOutOfRange(f"lag {h} outside 0..{n - 2}")
    return float(kernels.covariances(v, h)[h])


def correlogram_c2(ts, d: int) -> Correlogram:
    """C_hat(h)/C_hat(0) for h = 0..d. The caller clamps d to n-2."""
    v = _values(ts)
    n = len(v)
    if not 1 <= d <= n - 2:
        raise LagOutOfRange(f"cutoff {d} outside 1..{n - 2}")
    cov = kernels.covariances(v, d)
    if not cov[0] > 0.0:
        raise DegenerateVariogram("C_hat(0) must be > 0 (constant series?)")
    rho = cov / cov[0]
    rho[0] = 1.0
    return Correlogram("C2", rho, d)


def correlograms(ts):
    """Variogram, cutoff and both correlograms with C2 using min(d, n-2)."""
    vg = semivariogram(ts)
    d = monotone_cutoff(vg)
    c1 = correlogram_c1(vg, d)
    c2 = correlogram_c2(ts, min(d, vg.n - 2))
    return vg, d, c1, c2
