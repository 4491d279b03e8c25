import math

import pytest

from krigmean.ingest import TimeSeries
from krigmean.montecarlo import SyntheticSpec, generate_series
from krigmean.pipeline import run
from krigmean.plotdata import FILES, HEADERS, emit_plot_data, fmt, read_plot_csv
from krigmean.scan import ScanConfig, scan


@pytest.fixture(scope="module")
def accepted():
    ts = generate_series(SyntheticSpec(30, 10.0, 1.0, "gaussian_decay", a=7.5, seed=0))
    res = run(ts).scan
    assert res.accepted is not None
    return res


def test_four_files_with_headers(accepted, tmp_path):
    paths = emit_plot_data(accepted, tmp_path)
    assert [p.name for p in paths] == list(FILES)
    for name in FILES:
        header, _ = read_plot_csv(tmp_path / name)
        assert header == HEADERS[name]


def test_row_counts(accepted, tmp_path):
    emit_plot_data(accepted, tmp_path)
    n = accepted.n
    acc = accepted.accepted
    _, series = read_plot_csv(tmp_path / "series.csv")
    _, est = read_plot_csv(tmp_path / "estimator.csv")
    _, classic = read_plot_csv(tmp_path / "classic.csv")
    _, meta = read_plot_csv(tmp_path / "meta.csv")
    assert len(series) == n
    assert len(est) == len(accepted.rows_at(acc.t)) == acc.j - n
    assert [r[0] for r in classic] == list(range(n + 1, n + 301))
    assert {r[1] for r in classic} == {float(fmt(acc.estimate.m_hat))}
    assert meta == [[n, float(fmt(accepted.theta)), acc.t, acc.j, 0.0001]]


def test_values_round_trip_to_ten_digits(accepted, tmp_path):
    emit_plot_data(accepted, tmp_path)
    _, series = read_plot_csv(tmp_path / "series.csv")
    for (i, v), orig in zip(series, accepted.values):
        assert v == pytest.approx(orig, rel=1e-9)
    _, est = read_plot_csv(tmp_path / "estimator.csv")
    last = est[-1]
    assert last[0] == accepted.accepted.j
    assert last[1] == pytest.approx(accepted.accepted.estimate.m_hat, rel=1e-9)
    assert last[4] == pytest.approx(accepted.accepted.estimate.constraint_g, rel=1e-9)


def test_dated_series_gets_date_column(tmp_path):
    ts = TimeSeries((1.0, 3.0, 2.0, 5.0, 4.0, 6.0), tuple(f"2000-0{k}-01" for k in range(1, 7)))
    res = scan(ts, 2.0, ScanConfig(s_max=2, j_max=10, epsilon=0.0))
    emit_plot_data(res, tmp_path)
    header, rows = read_plot_csv(tmp_path / "series.csv")
    assert header == ["index", "value", "date"]
    assert rows[0] == [1, 1.0, "2000-01-01"]


def test_unaccepted_result(tmp_path):
    ts = TimeSeries((1.0, 3.0, 2.0, 5.0, 4.0, 6.0))
    res = scan(ts, 2.0, ScanConfig(s_max=2, j_max=10, epsilon=0.0))
    emit_plot_data(res, tmp_path)
    assert read_plot_csv(tmp_path / "classic.csv")[1] == []
    _, meta = read_plot_csv(tmp_path / "meta.csv")
    assert meta[0][2] is None and meta[0][3] is None
    _, est = read_plot_csv(tmp_path / "estimator.csv")
    assert len(est) == 4  # last scanned t, j = 7..10


def test_fmt_ten_significant_digits():
    assert fmt(math.pi) == "3.141592654"
    assert fmt(12) == "12"
    assert fmt(None) == ""
