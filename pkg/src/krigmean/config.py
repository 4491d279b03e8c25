"""Run configuration: one schema, a key=value file format, flag overrides.

Config files hold ``key = value`` lines; ``#`` starts a comment. Keys are
the ``RunConfig`` field names (dashes and underscores are equivalent).
"""
from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

from .fit import POOLING_MODES
from .kriging import PIVOT_TOL
from .pipeline import FitConfig, PipelineConfig
from .scan import ScanConfig


def _bool(text):
    s = str(text).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _window(text):
    if isinstance(text, tuple):
        return text
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) == 1:
        return (int(parts[0]), None)
    if len(parts) != 2:
        raise ValueError(f"window must be 'start' or 'start,n', got {text!r}")
    return (int(parts[0]), int(parts[1]) if parts[1] else None)


def _opt_int(text):
    return None if text in (None, "", "none", "None") else int(text)


@dataclass(frozen=True)
class RunConfig:
    input: str | None = None
    format: str = "plain"
    window: tuple = (1, None)  # (start, n), 1-based; n=None means to the end
    label: str = "series"
    pooling: str = "pooled"
    init_theta: float = 1.0
    tol: float = 1e-10
    max_iter: int = 200
    s_max: int = 100
    j_max: int | None = None  # None: n + 300
    epsilon: float = 1e-4
    require_nonneg_variance: bool = True
    sign_change_fallback: bool = False
    pivot_tol: float = PIVOT_TOL
    workers: int = 1
    out_dir: str = "out"
    # coverage
    n: int = 30
    mean: float = 0.0
    sigma2: float = 1.0
    corr_model: str = "white_noise"
    a: float | None = None
    seed: int = 0
    trials: int = 500

    def validate(self):
        if self.format not in ("plain", "dated"):
            raise ValueError(f"format must be plain or dated, got {self.format!r}")
        if self.pooling not in POOLING_MODES + ("separate",):
            raise ValueError(f"unknown pooling {self.pooling!r}")
        return self

    def fit_config(self):
        pooling = "pooled" if self.pooling == "separate" else self.pooling
        return FitConfig(pooling, self.init_theta, self.tol, self.max_iter)

    def scan_config(self):
        return ScanConfig(
            self.s_max, self.j_max, self.epsilon, self.require_nonneg_variance,
            self.sign_change_fallback, self.pivot_tol, self.workers,
        )

    def pipeline_config(self):
        return PipelineConfig(self.fit_config(), self.scan_config())


CONVERTERS = {
    "input": str, "format": str, "window": _window, "label": str, "pooling": str,
    "init_theta": float, "tol": float, "max_iter": int, "s_max": int, "j_max": _opt_int,
    "epsilon": float, "require_nonneg_variance": _bool, "sign_change_fallback": _bool,
    "pivot_tol": float, "workers": int, "out_dir": str, "n": int, "mean": float,
    "sigma2": float, "corr_model": str, "a": lambda s: None if s in (None, "", "none") else float(s),
    "seed": int, "trials": int,
}
assert set(CONVERTERS) == {f.name for f in fields(RunConfig)}


def parse_config_text(text):
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONVERTERS:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        out[key] = value
    return out


def build_config(file=None, overrides=None) -> RunConfig:
    """Defaults, then the config file, then explicit overrides (None = unset)."""
    raw = parse_config_text(Path(file).read_text(encoding="utf-8")) if file else {}
    raw.update({k: v for k, v in (overrides or {}).items() if v is not None})
    typed = {k: CONVERTERS[k](v) if isinstance(v, str) else v for k, v in raw.items()}
    return replace(RunConfig(), **typed).validate()


def dump_config(cfg: RunConfig) -> str:
    lines = []
    for f in fields(RunConfig):
        v = getattr(cfg, f.name)
        if f.name == "window":
            v = f"{v[0]},{'' if v[1] is None else v[1]}"
        lines.append(f"{f.name} = {'' if v is None else v}")
    return "\n".join(lines) + "\n"
