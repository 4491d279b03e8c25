"""Fitting the decay exponent of |rho(h)| = n ** (-theta * (h/n)**2).

The model is written as ``exp(-theta * x)`` with ``x = (h/n)**2 * ln n``,
so the derivative with respect to theta is simply ``-x * f``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoInformativePoints, NonFiniteResidual

POOLING_MODES = ("pooled", "average", "c1", "c2")

LAMBDA_START = 1e-3
LAMBDA_FACTOR = 10.0
LAMBDA_MAX = 1e20


@dataclass
class FitResult:
    theta: float
    iterations: int
    final_sse: float
    converged: bool
    initial_sse: float = math.nan
    sse_history: list = field(default_factory=list, repr=False)

    def to_dict(self):
        return {
            "theta": self.theta,
            "iterations": self.iterations,
            "sse": self.final_sse,
            "converged": self.converged,
        }


def _design(points, n):
    pts = [(int(h), float(r)) for h, r in points if int(h) >= 1]
    if not pts:
        raise NoInformativePoints("no points with lag h >= 1")
    h = np.array([p[0] for p in pts], dtype=np.float64)
    r = np.array([p[1] for p in pts], dtype=np.float64)
    return (h / n) ** 2 * math.log(n), r


def model_abs_rho(h, theta, n):
    """|rho(h)| = n ** (-theta * (h/n)**2)."""
    h = np.asarray(h, dtype=np.float64)
    return np.exp(-theta * (h / n) ** 2 * math.log(n))


def lm_fit_theta(points, n, init_theta=1.0, tol=1e-10, max_iter=200) -> FitResult:
    """Levenberg-Marquardt least squares for theta.

    The damped step is ``J'r / (J'J (1 + lam))`` (Marquardt scaling,
    which for one parameter is the only scaling there is). ``lam`` starts
    at 1e-3, is divided by 10 after an accepted step and multiplied by 10
    after a rejected one. Steps that would leave theta <= 0 are rejected.
    Converged means an accepted step, or the undamped Gauss-Newton step
    at the current point, is smaller than ``tol``.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    x, r = _design(points, n)

    theta = float(init_theta)
    f = np.exp(-theta * x)
    res = r - f
    sse = float(res @ res)
    if not math.isfinite(sse):
        raise NonFiniteResidual(f"non-finite residual at theta={theta}")
    initial_sse = sse
    history = [sse]
    lam = LAMBDA_START
    converged = False

    it = 0
    while it < max_iter:
        it += 1
        jac = -x * f
        jtj = float(jac @ jac)
        jtr = float(jac @ res)
        if jtj == 0.0:
            break
        if abs(jtr / jtj) < tol:
            converged = True
            break
        step = jtr / (jtj * (1.0 + lam))
        trial = theta + step
        if trial > 0.0:
            f_new = np.exp(-trial * x)
            res_new = r - f_new
            sse_new = float(res_new @ res_new)
            if not math.isfinite(sse_new):
                raise NonFiniteResidual(f"non-finite residual at theta={trial}")
            if sse_new <= sse:
                theta, f, res, sse = trial, f_new, res_new, sse_new
                history.append(sse)
                lam /= LAMBDA_FACTOR
                if abs(step) < tol:
                    converged = True
                    break
                continue
        lam *= LAMBDA_FACTOR
        if lam > LAMBDA_MAX:
            break

    return FitResult(theta, it, sse, converged, initial_sse, history)


def log_domain_theta_oracle(points, n) -> float:
    """Closed-form least squares of ln r = -theta * x.

    Points with h = 0 or r <= 0 are dropped first.
    """
    pts = [(h, r) for h, r in points if int(h) >= 1 and r > 0.0]
    if not pts:
        raise NoInformativePoints("no points with h >= 1 and r > 0")
    x, r = _design(pts, n)
    return float(-(x @ np.log(r)) / (x @ x))


def fit_points(c1, c2, mode="pooled"):
    """Assemble (h, |rho|) fitting points from the two correlograms, h = 1..d."""
    if mode == "pooled":
        return c1.points() + c2.points()
    if mode == "c1":
        return c1.points()
    if mode == "c2":
        return c2.points()
    if mode == "average":
        d = min(c1.d, c2.d)
        return [(h, 0.5 * (float(c1.rho_abs[h]) + float(c2.rho_abs[h]))) for h in range(1, d + 1)]
    raise ValueError(f"unknown pooling mode {mode!r}; expected one of {POOLING_MODES}")
