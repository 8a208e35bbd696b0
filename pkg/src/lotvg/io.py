"""Series ingestion and graph/timing serialization."""
from __future__ import annotations

import contextlib
import csv
import io
import math
import os
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Union

from .core import VisibilityGraph
from .exceptions import SeriesParseError

__all__ = [
    "SeriesFile",
    "TimingRecord",
    "parse_value",
    "read_series_csv",
    "iter_values",
    "write_edge_list",
    "read_edge_list",
    "write_timings_csv",
    "TIMINGS_HEADER",
]

PathOrFile = Union[str, os.PathLike, IO[str]]

TIMINGS_HEADER = ("algorithm", "series", "window", "repeat", "measure", "seconds")


@dataclass(frozen=True)
class SeriesFile:
    path: PathOrFile
    value_column: Union[int, str] = 1
    has_header: bool = True
    order: str = "oldest-first"
    delimiter: str = ","

    def __post_init__(self):
        if self.order not in ("oldest-first", "newest-first"):
            raise ValueError(f"order must be 'oldest-first' or 'newest-first', got {self.order!r}")


@dataclass(frozen=True)
class TimingRecord:
    algorithm: str
    series: str
    window: int
    repeat: int
    measure: str
    seconds: float

    def __post_init__(self):
        if self.seconds < 0:
            raise ValueError(f"negative duration {self.seconds}")

    def row(self) -> tuple[str, ...]:
        return (self.algorithm, self.series, str(self.window), str(self.repeat),
                self.measure, f"{self.seconds:.2E}")


@contextlib.contextmanager
def _open(target: PathOrFile, mode: str):
    if isinstance(target, (str, os.PathLike)):
        with open(target, mode, newline="" if "r" in mode else None, encoding="utf-8") as fh:
            yield fh
    else:
        yield target


def parse_value(cell: str, line: int | None = None) -> float:
    """Parse one numeric cell, stripping whitespace and thousands separators."""
    where = f" on line {line}" if line is not None else ""
    text = cell.strip().replace(",", "").replace("_", "")
    try:
        value = float(text)
    except ValueError:
        raise SeriesParseError(f"non-numeric value {cell!r}{where}") from None
    if not math.isfinite(value):
        raise SeriesParseError(f"non-finite value {cell!r}{where}")
    return value


def read_series_csv(file: "SeriesFile | PathOrFile", **options) -> list[float]:
    """Read one numeric column as an oldest-first list of floats.

    ``file`` may be a :class:`SeriesFile` or a path/handle plus the same
    fields as keyword options.
    """
    if not isinstance(file, SeriesFile):
        file = SeriesFile(file, **options)
    column = file.value_column
    values: list[float] = []
    with _open(file.path, "r") as fh:
        reader = csv.reader(fh, delimiter=file.delimiter)
        col_index = None
        header_seen = not file.has_header
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if not header_seen:
                header_seen = True
                if isinstance(column, str):
                    names = [c.strip().lower() for c in row]
                    try:
                        col_index = names.index(column.strip().lower())
                    except ValueError:
                        raise SeriesParseError(
                            f"column {column!r} not in header {row!r}") from None
                continue
            if col_index is None:
                if isinstance(column, str):
                    if not column.lstrip("-").isdigit():
                        raise SeriesParseError(f"column name {column!r} needs a header row")
                    column = int(column)
                col_index = column
            if not -len(row) <= col_index < len(row):
                raise SeriesParseError(
                    f"line {line} has {len(row)} column(s), no column {col_index}")
            values.append(parse_value(row[col_index], line))
    if not values:
        raise SeriesParseError("no data rows found")
    if file.order == "newest-first":
        values.reverse()
    return values


def iter_values(fh: IO[str]) -> Iterator[float]:
    """Yield one value per non-blank line, lazily (suitable for stdin)."""
    for line, text in enumerate(fh, start=1):
        if text.strip():
            yield parse_value(text, line)


def write_edge_list(g: "VisibilityGraph | Iterable[tuple[int, int]]", sink: PathOrFile) -> None:
    edges = g.edges() if isinstance(g, VisibilityGraph) else sorted(
        (min(i, j), max(i, j)) for i, j in g)
    with _open(sink, "w") as fh:
        fh.write("".join(f"{i} {j}\n" for i, j in edges))


def read_edge_list(source: PathOrFile) -> list[tuple[int, int]]:
    edges = []
    with _open(source, "r") as fh:
        for line, text in enumerate(fh, start=1):
            parts = text.split()
            if not parts:
                continue
            if len(parts) != 2:
                raise SeriesParseError(f"line {line}: expected 'i j', got {text!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise SeriesParseError(f"line {line}: non-integer node in {text!r}") from None
    return edges


def write_timings_csv(records: Iterable[TimingRecord], sink: PathOrFile) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TIMINGS_HEADER)
    for rec in records:
        writer.writerow(rec.row())
    with _open(sink, "w") as fh:
        fh.write(buf.getvalue())
