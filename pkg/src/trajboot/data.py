"""Longitudinal trajectory datasets: validation, ingestion, resampling.

A dataset is N complete subject trajectories observed on one shared,
strictly increasing time grid. Irregular grids and missing cells are
rejected outright rather than imputed, which keeps every downstream
fit a single shared design matrix.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateCell, IndexOutOfRange, NonNumeric, RaggedData

__all__ = [
    "TrajectoryDataset",
    "load_long",
    "load_wide",
    "read_csv",
    "resample",
    "to_long_rows",
    "write_long_csv",
    "write_wide_csv",
]


@dataclass(frozen=True)
class TrajectoryDataset:
    """N subjects by T shared time points of continuous outcomes.

    Immutable after construction; safe to share across concurrent readers.

    Attributes
    ----------
    subject_ids:
        Opaque identifiers, length N, ordered by first appearance.
    times:
        Strictly increasing shared grid, length T >= 2.
    outcomes:
        N x T matrix of finite reals; row i is subject i's trajectory.
    """

    subject_ids: tuple[str, ...]
    times: np.ndarray
    outcomes: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=np.float64)
        outcomes = np.asarray(self.outcomes, dtype=np.float64)
        if outcomes.ndim != 2:
            raise ValueError("outcomes must be a 2-d array")
        n, t = outcomes.shape
        if n < 1:
            raise ValueError("need at least one subject")
        if t < 2:
            raise ValueError("need at least two time points")
        if len(self.subject_ids) != n:
            raise ValueError("subject_ids length must match outcome rows")
        if times.shape != (t,):
            raise ValueError("times length must match outcome columns")
        if not np.all(np.isfinite(times)):
            raise NonNumeric("time grid contains non-finite values")
        if not np.all(np.diff(times) > 0):
            raise ValueError("times must be strictly increasing")
        if not np.all(np.isfinite(outcomes)):
            raise NonNumeric("outcomes contain non-finite values")
        times.setflags(write=False)
        outcomes.setflags(write=False)
        object.__setattr__(self, "subject_ids", tuple(str(s) for s in self.subject_ids))
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "outcomes", outcomes)

    @property
    def n_subjects(self) -> int:
        return self.outcomes.shape[0]

    @property
    def n_times(self) -> int:
        return self.outcomes.shape[1]


def _parse_value(raw, where: str) -> float:
    try:
        v = float(raw)
    except (TypeError, ValueError):
        raise NonNumeric(f"{where}: {raw!r} is not a number") from None
    if not np.isfinite(v):
        raise NonNumeric(f"{where}: {raw!r} is not finite")
    return v


def load_long(rows: Iterable[tuple]) -> TrajectoryDataset:
    """Build a dataset from (subject_id, time, value) records.

    Subjects are ordered by first appearance; each subject must cover the
    identical time grid. Raises RaggedData when a subject misses a grid
    point, DuplicateCell when an (id, time) pair repeats, NonNumeric for
    unparseable values.
    """
    cells: dict[str, dict[float, float]] = {}
    for i, row in enumerate(rows):
        try:
            sid, t, y = row
        except (TypeError, ValueError):
            raise NonNumeric(f"row {i}: expected (id, time, value), got {row!r}") from None
        sid = str(sid)
        t = _parse_value(t, f"row {i} (time)")
        y = _parse_value(y, f"row {i} (value)")
        per = cells.setdefault(sid, {})
        if t in per:
            raise DuplicateCell(f"row {i}: duplicate cell for subject {sid!r} at time {t}")
        per[t] = y
    if not cells:
        raise RaggedData("no rows given")

    grids = {sid: tuple(sorted(per)) for sid, per in cells.items()}
    grid = max(grids.values(), key=len)
    for sid, g in grids.items():
        if g != grid:
            missing = sorted(set(grid) - set(g))
            extra = sorted(set(g) - set(grid))
            raise RaggedData(
                f"subject {sid!r} does not match the shared time grid "
                f"(missing {missing}, extra {extra})"
            )
    ids = tuple(cells)
    outcomes = np.array([[cells[sid][t] for t in grid] for sid in ids], dtype=np.float64)
    return TrajectoryDataset(ids, np.array(grid, dtype=np.float64), outcomes)


def to_long_rows(ds: TrajectoryDataset) -> list[tuple[str, float, float]]:
    """Serialize back to (id, time, value) records; inverse of load_long."""
    return [
        (sid, float(t), float(ds.outcomes[i, j]))
        for i, sid in enumerate(ds.subject_ids)
        for j, t in enumerate(ds.times)
    ]


def resample(ds: TrajectoryDataset, indices: Sequence[int]) -> TrajectoryDataset:
    """Stack whole subject rows selected by position, duplicates allowed.

    Fresh ids "<original>#<ordinal>" keep repeated picks distinguishable.
    The bootstrap convention is len(indices) == N, but any positive length
    is accepted for research use.
    """
    idx = np.asarray(indices, dtype=np.int64)
    if idx.size == 0:
        raise IndexOutOfRange("empty index list")
    n = ds.n_subjects
    if np.any(idx < 0) or np.any(idx >= n):
        bad = idx[(idx < 0) | (idx >= n)][0]
        raise IndexOutOfRange(f"index {bad} outside [0, {n})")
    seen: dict[int, int] = {}
    ids = []
    for i in idx:
        k = seen.get(int(i), 0)
        seen[int(i)] = k + 1
        ids.append(f"{ds.subject_ids[i]}#{k}")
    return TrajectoryDataset(tuple(ids), ds.times, ds.outcomes[idx])


# ---------------------------------------------------------------------------
# CSV interfaces. Long format: header "id,time,y". Wide format: header
# "id,y_<t1>,...,y_<tT>" with the grid parsed from the header. UTF-8,
# "." decimal separator.
# ---------------------------------------------------------------------------

def load_wide(lines: Iterable[str]) -> TrajectoryDataset:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise RaggedData("empty file") from None
    if len(header) < 3 or header[0].strip() != "id":
        raise NonNumeric("wide header must be id,y_<t1>,...,y_<tT>")
    times = []
    for col in header[1:]:
        col = col.strip()
        if not col.startswith("y_"):
            raise NonNumeric(f"wide header column {col!r} must look like y_<time>")
        times.append(_parse_value(col[2:], f"header column {col!r}"))
    ids = []
    rows = []
    seen = set()
    for ln, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise RaggedData(f"line {ln}: expected {len(header)} fields, got {len(row)}")
        sid = row[0]
        if sid in seen:
            raise DuplicateCell(f"line {ln}: duplicate subject {sid!r}")
        seen.add(sid)
        ids.append(sid)
        rows.append([_parse_value(v, f"line {ln}") for v in row[1:]])
    if not ids:
        raise RaggedData("no data rows")
    order = np.argsort(times, kind="stable")
    grid = np.array(times, dtype=np.float64)[order]
    if len(np.unique(grid)) != len(grid):
        raise DuplicateCell("wide header repeats a time point")
    return TrajectoryDataset(tuple(ids), grid, np.array(rows, dtype=np.float64)[:, order])


def _load_long_csv(lines: Iterable[str]) -> TrajectoryDataset:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise RaggedData("empty file") from None
    cols = [c.strip() for c in header]
    if cols[:3] != ["id", "time", "y"]:
        raise NonNumeric("long header must be id,time,y")
    rows = []
    for ln, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) < 3:
            raise NonNumeric(f"line {ln}: expected id,time,y")
        rows.append(
            (row[0], _parse_value(row[1], f"line {ln}"), _parse_value(row[2], f"line {ln}"))
        )
    return load_long(rows)


def read_csv(path) -> TrajectoryDataset:
    """Load a dataset from CSV, auto-detecting long vs wide by header."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        first = fh.readline()
        fh.seek(0)
        head = [c.strip() for c in first.strip().split(",")]
        if head[:3] == ["id", "time", "y"]:
            return _load_long_csv(fh)
        if head and head[0] == "id" and all(c.startswith("y_") for c in head[1:]) and len(head) >= 3:
            return load_wide(fh)
        raise NonNumeric(
            "unrecognized header: expected 'id,time,y' (long) or 'id,y_<t>,...' (wide)"
        )


def write_long_csv(ds: TrajectoryDataset, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "time", "y"])
        for sid, t, y in to_long_rows(ds):
            w.writerow([sid, fmt_num(t), fmt_num(y)])


def write_wide_csv(ds: TrajectoryDataset, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id"] + [f"y_{fmt_num(t)}" for t in ds.times])
        for i, sid in enumerate(ds.subject_ids):
            w.writerow([sid] + [fmt_num(v) for v in ds.outcomes[i]])


def fmt_num(x: float) -> str:
    """Render a float compactly, dropping a trailing '.0' on integers."""
    v = float(x)
    if v.is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(v)
