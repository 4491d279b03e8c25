import pytest

from krigmean.errors import EmptyInput, MalformedRow, TooShort
from krigmean.ingest import TimeSeries, load_series, write_plain


def test_plain(write):
    ts = load_series(write("a.txt", "1\n2\n4\n"), "plain")
    assert ts.values == (1.0, 2.0, 4.0)
    assert ts.n == 3
    assert ts.labels is None


def test_dated_with_header(write):
    text = "date,close\n1989-09-01,2200.0\n1989-10-01,2150.0\n1989-11-01,2250.0\n"
    ts = load_series(write("a.csv", text), "dated")
    assert ts.values == (2200.0, 2150.0, 2250.0)
    assert ts.labels == ("1989-09-01", "1989-10-01", "1989-11-01")


def test_dated_without_header(write):
    ts = load_series(write("a.csv", "d1,1\nd2,2\nd3,3"), "dated")
    assert ts.values == (1.0, 2.0, 3.0)


def test_crlf(write):
    assert load_series(write("a.txt", "1\r\n2\r\n4\r\n")).values == (1.0, 2.0, 4.0)


def test_malformed_row_reports_line(write):
    with pytest.raises(MalformedRow) as info:
        load_series(write("a.txt", "1\nabc\n3\n"))
    assert info.value.line == 2


def test_malformed_dated_row(write):
    with pytest.raises(MalformedRow) as info:
        load_series(write("a.csv", "date,close\nx,1\ny,oops\nz,3\n"), "dated")
    assert info.value.line == 3


@pytest.mark.parametrize("text", ["1\n\n3\n4\n", "1\n   \n3\n4\n"])
def test_blank_lines_rejected(write, text):
    with pytest.raises(MalformedRow):
        load_series(write("a.txt", text))


@pytest.mark.parametrize("text", ["1\nnan\n3\n", "1\ninf\n3\n"])
def test_non_finite_rejected(write, text):
    with pytest.raises(MalformedRow):
        load_series(write("a.txt", text))


def test_too_short(write):
    with pytest.raises(TooShort):
        load_series(write("a.txt", "1\n2\n"))


def test_empty(write):
    with pytest.raises(EmptyInput):
        load_series(write("a.txt", ""))
    with pytest.raises(EmptyInput):
        load_series(write("b.csv", "date,close\n"), "dated")


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_series(tmp_path / "nope.txt")


def test_round_trip_full_precision(tmp_path, rng):
    ts = TimeSeries(tuple(rng.normal(size=50).tolist()))
    write_plain(ts, tmp_path / "x.txt")
    assert load_series(tmp_path / "x.txt").values == ts.values


def test_deterministic(write):
    p = write("a.txt", "3.25\n-1e-3\n7\n")
    assert load_series(p) == load_series(p)


def test_window():
    ts = TimeSeries((1, 2, 3, 4, 5), ("a", "b", "c", "d", "e"))
    w = ts.window(2, 3)
    assert w.values == (2.0, 3.0, 4.0)
    assert w.labels == ("b", "c", "d")
    assert ts.window().values == ts.values
    with pytest.raises(ValueError):
        ts.window(4, 3)


def test_timeseries_immutable():
    ts = TimeSeries((1, 2, 3))
    with pytest.raises(AttributeError):
        ts.values = (4, 5, 6)
