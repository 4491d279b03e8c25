"""Regenerate the packaged synthetic fixture (dated CSV, 60 monthly points).

Gaussian-decay stationary series, mean 100, variance 4, range 15, seed 2022.
"""
from pathlib import Path

from krigmean.montecarlo import SyntheticSpec, generate_series

OUT = Path(__file__).resolve().parents[1] / "src" / "krigmean" / "data" / "synthetic_monthly.csv"


def main():
    ts = generate_series(SyntheticSpec(60, 100.0, 4.0, "gaussian_decay", a=15.0, seed=2022))
    lines = ["date,close"]
    for k, v in enumerate(ts.values):
        year, month = divmod(k, 12)
        lines.append(f"{1990 + year}-{month + 1:02d}-01,{v!r}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(OUT)


if __name__ == "__main__":
    main()
