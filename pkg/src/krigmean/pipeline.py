"""End-to-end run: correlograms, theta fit, (t, j) scan."""
from __future__ import annotations

from dataclasses import dataclass, field

from .empirical import correlograms
from .fit import FitResult, fit_points, lm_fit_theta
from .scan import ScanConfig, ScanResult, scan


@dataclass(frozen=True)
class FitConfig:
    pooling: str = "pooled"
    init_theta: float = 1.0
    tol: float = 1e-10
    max_iter: int = 200


@dataclass(frozen=True)
class PipelineConfig:
    fit: FitConfig = field(default_factory=FitConfig)
    scan: ScanConfig = field(default_factory=ScanConfig)


@dataclass
class PipelineResult:
    d: int
    sigma2_variogram: float
    fit: FitResult
    scan: ScanResult


def fit_theta(ts, cfg: FitConfig | None = None):
    """Correlograms of ``ts`` and the LM fit of theta to them."""
    cfg = cfg or FitConfig()
    vg, d, c1, c2 = correlograms(ts)
    pts = fit_points(c1, c2, cfg.pooling)
    res = lm_fit_theta(pts, len(vg.gamma), cfg.init_theta, cfg.tol, cfg.max_iter)
    return vg, d, c1, c2, res


def run(ts, cfg: PipelineConfig | None = None) -> PipelineResult:
    cfg = cfg or PipelineConfig()
    _, d, c1, _, fitres = fit_theta(ts, cfg.fit)
    result = scan(ts, fitres.theta, cfg.scan)
    return PipelineResult(d, c1.sigma2_hat, fitres, result)
