"""
Monitor time series as CSV.
"""

import csv
import math
import os
from pathlib import Path
from typing import Iterable, Union

from src.errors import SnapshotError
from src.models import BaseModel

COLUMNS = (
    "time",
    "monitor",
    "point_or_region",
    "lhs",
    "rhs",
    "implied_constant",
    "clipped",
)


class MonitorRow(BaseModel):
    """One evaluation of one monitor."""

    time: float
    monitor: str
    point_or_region: str
    lhs: float
    rhs: float
    implied_constant: float
    clipped: bool

    def to_csv(self) -> list[str]:
        # repr keeps floats round-trippable so reruns compare byte for byte
        return [
            repr(self.time),
            self.monitor,
            self.point_or_region,
            repr(self.lhs),
            repr(self.rhs),
            repr(self.implied_constant),
            "true" if self.clipped else "false",
        ]

    @classmethod
    def from_csv(cls, record: dict[str, str]) -> "MonitorRow":
        return cls(
            time=float(record["time"]),
            monitor=record["monitor"],
            point_or_region=record["point_or_region"],
            lhs=float(record["lhs"]),
            rhs=float(record["rhs"]),
            implied_constant=float(record["implied_constant"]),
            clipped=record["clipped"] == "true",
        )


class MonitorSeries:
    """
    A monitor CSV file with a header row and non-decreasing times per monitor.

    Args:
        path (str | os.PathLike): The CSV file.
    """

    def __init__(self, path: Union[str, os.PathLike[str]]) -> None:
        self.path = Path(path)
        self._last: dict[tuple[str, str], float] = {}

    def create(self) -> None:
        """Start the file with its header row, replacing any previous content."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("w", newline="") as f:
            csv.writer(f, lineterminator="\n").writerow(COLUMNS)
        self._last.clear()

    def append(self, rows: Iterable[MonitorRow]) -> None:
        """
        Append rows.

        Raises:
            SnapshotError: If a row goes back in time for its monitor.
        """
        rows = list(rows)
        for row in rows:
            key = (row.monitor, row.point_or_region)
            if row.time < self._last.get(key, -math.inf):
                raise SnapshotError(
                    f"monitor {row.monitor} time {row.time!r} precedes "
                    f"{self._last[key]!r}"
                )
            self._last[key] = row.time
        with self.path.open("a", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerows(row.to_csv() for row in rows)

    def read(self) -> list[MonitorRow]:
        with self.path.open(newline="") as f:
            reader = csv.DictReader(f)
            if tuple(reader.fieldnames or ()) != COLUMNS:
                raise SnapshotError(f"{self.path} lacks the monitor header row")
            return [MonitorRow.from_csv(record) for record in reader]
