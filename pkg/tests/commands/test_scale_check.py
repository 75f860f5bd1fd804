import csv
from pathlib import Path

import pytest

from src.commands import cmd_scale_check, load_trajectory
from src.commands.scale_check import SCALING_COLUMNS
from src.errors import SnapshotError
from src.evolution import Trajectory
from src.storage import SnapshotStore
from src.utils.responses import ExitStatus


def _store(directory: Path, trajectory: Trajectory) -> None:
    store = SnapshotStore(directory)
    for step, state in enumerate(trajectory):
        store.create(state, step, trajectory.t0, trajectory.m0)


class TestLoadTrajectory:
    def test_loads_all_snapshots(self, tmp_path: Path, trajectory: Trajectory) -> None:
        _store(tmp_path, trajectory)
        loaded = load_trajectory(tmp_path)
        assert len(loaded) == len(trajectory)
        assert loaded.t0 == trajectory.t0
        assert loaded.m0 == trajectory.m0
        assert loaded.retention is None

    def test_empty(self, tmp_path: Path) -> None:
        with pytest.raises(SnapshotError, match="no snapshots"):
            load_trajectory(tmp_path)


class TestCmdScaleCheck:
    def test_identities_hold(self, tmp_path: Path, trajectory: Trajectory) -> None:
        _store(tmp_path, trajectory)
        response = cmd_scale_check(tmp_path, 2.0)
        assert response.ok
        assert response.data["max_relative_error"] < 1e-12
        assert response.data["frozen"] is False

        table = Path(response.data["table"])
        assert table.name == "scaling_k2.csv"
        with open(table, newline="") as f:
            rows = list(csv.reader(f))
        assert tuple(rows[0]) == SCALING_COLUMNS
        assert len(rows) > 1

    def test_single_snapshot_is_frozen(
        self, tmp_path: Path, trajectory: Trajectory
    ) -> None:
        latest = trajectory.latest
        SnapshotStore(tmp_path).create(latest, 0, latest.t, trajectory.m0)
        response = cmd_scale_check(tmp_path, 4.0, tmp_path / "tables")
        assert response.ok
        assert response.data["frozen"] is True
        assert response.data["max_relative_error"] < 1e-12
        assert Path(response.data["table"]).parent == tmp_path / "tables"

    @pytest.mark.parametrize("k", [3.0, 0.0, -2.0])
    def test_invalid_scale(self, tmp_path: Path, k: float) -> None:
        response = cmd_scale_check(tmp_path, k)
        assert response.status_code == ExitStatus.SCALING_ERROR

    def test_no_snapshots(self, tmp_path: Path) -> None:
        response = cmd_scale_check(tmp_path, 2.0)
        assert response.status_code == ExitStatus.SNAPSHOT_ERROR
