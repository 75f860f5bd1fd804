import math
from pathlib import Path

import pytest

from src.errors import SnapshotError
from src.storage import COLUMNS, MonitorRow, MonitorSeries


def _row(time: float, monitor: str = "vz", **overrides) -> MonitorRow:
    values = {
        "time": time,
        "monitor": monitor,
        "point_or_region": "grid",
        "lhs": 0.1,
        "rhs": 0.2,
        "implied_constant": 0.5,
        "clipped": False,
    }
    values.update(overrides)
    return MonitorRow(**values)


class TestMonitorRow:
    def test_to_csv(self) -> None:
        row = _row(0.25, clipped=True, implied_constant=math.inf)
        assert row.to_csv() == ["0.25", "vz", "grid", "0.1", "0.2", "inf", "true"]

    def test_from_csv(self) -> None:
        row = _row(1.0 / 3.0)
        record = dict(zip(COLUMNS, row.to_csv()))
        assert MonitorRow.from_csv(record) == row


class TestMonitorSeries:
    def test_create_append_read(self, tmp_path: Path) -> None:
        series = MonitorSeries(tmp_path / "monitors.csv")
        series.create()
        series.append([_row(0.0), _row(0.0, "energy")])
        series.append([_row(0.5)])
        assert [(r.time, r.monitor) for r in series.read()] == [
            (0.0, "vz"),
            (0.0, "energy"),
            (0.5, "vz"),
        ]
        assert series.path.read_text().splitlines()[0] == ",".join(COLUMNS)

    def test_time_goes_back(self, tmp_path: Path) -> None:
        series = MonitorSeries(tmp_path / "monitors.csv")
        series.create()
        series.append([_row(1.0)])
        with pytest.raises(SnapshotError, match="precedes"):
            series.append([_row(0.5)])

    def test_missing_header(self, tmp_path: Path) -> None:
        path = tmp_path / "monitors.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(SnapshotError, match="header"):
            MonitorSeries(path).read()

    def test_create_truncates(self, tmp_path: Path) -> None:
        series = MonitorSeries(tmp_path / "monitors.csv")
        series.create()
        series.append([_row(1.0)])
        series.create()
        assert series.read() == []
        series.append([_row(0.0)])
