import io
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lotvg.core import VisibilityGraph
from lotvg.criteria import basic_build
from lotvg.exceptions import SeriesParseError
from lotvg.io import (
    SeriesFile,
    TimingRecord,
    iter_values,
    read_edge_list,
    read_series_csv,
    write_edge_list,
    write_timings_csv,
)

FIXTURES = Path(__file__).parent / "fixtures"
SIMPLE = "date,close\n2011-01-03,6.59\n2011-01-04,6.60\n"


def test_read_simple():
    assert read_series_csv(io.StringIO(SIMPLE)) == [6.59, 6.60]
    assert read_series_csv(io.StringIO(SIMPLE), order="newest-first") == [6.60, 6.59]


def test_read_thousands_and_quotes():
    text = 'date,close\n"2011-01-03","1,234.5"\n2011-01-04, 7 \n'
    assert read_series_csv(io.StringIO(text)) == [1234.5, 7.0]


def test_read_by_name_and_position(tmp_path):
    p = tmp_path / "s.csv"
    p.write_text("Date,Open,Close\na,1,2\nb,3,4\n")
    assert read_series_csv(p, value_column="close") == [2.0, 4.0]
    assert read_series_csv(p, value_column=1) == [1.0, 3.0]
    assert read_series_csv(SeriesFile(p, value_column=-1)) == [2.0, 4.0]
    with pytest.raises(SeriesParseError):
        read_series_csv(p, value_column="volume")


def test_read_headerless_single_column():
    assert read_series_csv(io.StringIO("1\n2.5\n\n-3\n"), value_column=0, has_header=False) == [1, 2.5, -3]


@pytest.mark.parametrize("text, fragment", [
    ("d,c\n2011,abc\n", "line 2"),
    ("d,c\n2011,1\n2012,nan\n", "line 3"),
    ("d,c\n2011,inf\n", "non-finite"),
    ("d,c\n2011\n", "column"),
    ("", "no data"),
    ("d,c\n", "no data"),
])
def test_read_errors(text, fragment):
    with pytest.raises(SeriesParseError, match=fragment):
        read_series_csv(io.StringIO(text))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.text(alphabet="0123456789.,-eE nainf", max_size=8), min_size=1, max_size=10))
def test_ingestion_never_emits_nonfinite(cells):
    text = "d,c\n" + "".join(f'x,"{c}"\n' for c in cells)
    try:
        values = read_series_csv(io.StringIO(text))
    except SeriesParseError:
        return
    assert all(v == v and abs(v) != float("inf") for v in values)


@pytest.mark.parametrize("name", ["usd_cny", "vix", "wti"])
def test_fixtures(name):
    path = FIXTURES / f"{name}.csv"
    values = read_series_csv(SeriesFile(path, value_column="Price", order="newest-first"))
    assert 100 <= len(values) <= 300
    assert values == read_series_csv(path)[::-1]
    assert all(v > 0 for v in values)


def test_iter_values():
    assert list(iter_values(io.StringIO("1\n\n2\n3.5\n"))) == [1.0, 2.0, 3.5]
    with pytest.raises(SeriesParseError, match="line 2"):
        list(iter_values(io.StringIO("1\nx\n")))


def test_write_edge_list_examples():
    buf = io.StringIO()
    write_edge_list(basic_build([1, 2, 4], "nvg"), buf)
    assert buf.getvalue() == "0 1\n0 2\n1 2\n"
    buf = io.StringIO()
    write_edge_list(VisibilityGraph(), buf)
    assert buf.getvalue() == ""
    buf = io.StringIO()
    write_edge_list(VisibilityGraph.from_edges([5, 7], [(7, 5)]), buf)
    assert buf.getvalue() == "5 7\n"


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-100, 100, allow_nan=False), min_size=1, max_size=40))
def test_edge_list_round_trip(values):
    g = basic_build(values, "nvg")
    buf = io.StringIO()
    write_edge_list(g, buf)
    buf.seek(0)
    assert set(read_edge_list(buf)) == g.edge_set()


def test_timings_csv():
    buf = io.StringIO()
    write_timings_csv([TimingRecord("LOT-NVG", "uniform", 2000, 1, "mean", 1.02e-3)], buf)
    assert buf.getvalue() == ("algorithm,series,window,repeat,measure,seconds\n"
                              "LOT-NVG,uniform,2000,1,mean,1.02E-03\n")
    buf = io.StringIO()
    write_timings_csv([], buf)
    assert buf.getvalue() == "algorithm,series,window,repeat,measure,seconds\n"
    assert TimingRecord("a", "b", 1, 1, "total", 0.0).row()[-1] == "0.00E+00"
    with pytest.raises(ValueError):
        TimingRecord("a", "b", 1, 1, "total", -1.0)


def test_timings_csv_to_path(tmp_path):
    p = tmp_path / "t.csv"
    write_timings_csv([TimingRecord("LT", "walk", 10, 2, "total", 12345.6)], p)
    assert p.read_text().splitlines()[1] == "LT,walk,10,2,total,1.23E+04"
