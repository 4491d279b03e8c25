"""Reading time series from plain or dated CSV files."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmptyInput, MalformedRow, TooShort

MIN_LENGTH = 3


@dataclass(frozen=True)
class TimeSeries:
    """Observed values v_1..v_n at integer positions 1..n.

    ``labels`` holds the date column of a dated file, untouched; it is
    only carried along for plot annotation.
    """

    values: tuple[float, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        vals = tuple(float(x) for x in self.values)
        if len(vals) < MIN_LENGTH:
            raise TooShort(f"need at least {MIN_LENGTH} values, got {len(vals)}")
        if not all(math.isfinite(x) for x in vals):
            raise MalformedRow(0, "", "non-finite value")
        if self.labels is not None and len(self.labels) != len(vals):
            raise ValueError("labels must match values in length")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)

    def window(self, start: int = 1, n: int | None = None) -> "TimeSeries":
        """Contiguous sub-series starting at 1-based ``start`` with ``n`` points."""
        if start < 1 or start > self.n:
            raise ValueError(f"window start {start} outside 1..{self.n}")
        stop = self.n if n is None else start - 1 + n
        if stop > self.n:
            raise ValueError(f"window {start},{n} runs past the end of a series of length {self.n}")
        labels = None if self.labels is None else self.labels[start - 1 : stop]
        return TimeSeries(self.values[start - 1 : stop], labels)


def _parse_float(text, lineno):
    try:
        value = float(text)
    except ValueError:
        raise MalformedRow(lineno, text) from None
    if not math.isfinite(value):
        raise MalformedRow(lineno, text, "non-finite value")
    return value


def _lines(path):
    raw = Path(path).read_bytes().decode("utf-8")
    lines = raw.replace("\r\n", "\n").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def load_series(path, format: str = "plain") -> TimeSeries:
    """Load a series from ``path``.

    ``plain``: one number per line. ``dated``: ``date,close`` rows in
    chronological order; a header row is skipped when its second field is
    not numeric. Blank lines are rejected rather than skipped.
    """
    if format not in ("plain", "dated"):
        raise ValueError(f"unknown format {format!r}")
    lines = _lines(path)
    if not lines:
        raise EmptyInput(f"{path}: no data")

    values = []
    labels = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            raise MalformedRow(lineno, line, "blank line")
        if format == "plain":
            values.append(_parse_float(line.strip(), lineno))
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) < 2:
            raise MalformedRow(lineno, line, "expected date,close")
        if lineno == 1:
            try:
                float(parts[1])
            except ValueError:
                continue
        labels.append(parts[0])
        values.append(_parse_float(parts[1], lineno))

    if not values:
        raise EmptyInput(f"{path}: header only")
    return TimeSeries(tuple(values), tuple(labels) if format == "dated" else None)


def write_plain(ts: TimeSeries, path) -> None:
    """Write one value per line using ``repr`` so a reload is exact."""
    Path(path).write_text("".join(f"{v!r}\n" for v in ts.values), encoding="utf-8")
