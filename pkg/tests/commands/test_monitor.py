from pathlib import Path

import pytest

from src.commands import cmd_monitor, cmd_run, replay
from src.commands.monitor import OFFLINE_SERIES
from src.config import Config
from src.errors import ConfigError
from src.fields import FlowState
from src.storage import SnapshotStore
from src.utils.responses import ExitStatus
from tests.fixtures.commands import config_text

SPECS = ("vz", "energy", "divergence", "vz_stream")


@pytest.fixture
def run_dir(tmp_path: Path) -> Path:
    config = tmp_path / "run.ini"
    config.write_text(config_text("swirl-gaussian", SPECS))
    output = tmp_path / "out"
    assert cmd_run(config, output).ok
    return output


class TestReplay:
    def test_reproduces_run_series(self, run_dir: Path) -> None:
        response = cmd_monitor(run_dir, "; ".join(SPECS))
        assert response.ok
        count = len(SnapshotStore(run_dir).get_by_query())
        assert response.data["snapshots"] == count
        assert response.data["rows"] == len(SPECS) * count
        offline = (run_dir / OFFLINE_SERIES).read_bytes()
        assert offline == (run_dir / Config.OUTPUT.MONITOR_SERIES).read_bytes()

    def test_subset_and_output(self, run_dir: Path, tmp_path: Path) -> None:
        output = tmp_path / "energy.csv"
        data = replay(run_dir, "energy", output)
        assert data["rows"] == data["snapshots"]
        lines = output.read_text().splitlines()
        assert len(lines) == data["snapshots"] + 1
        assert all(",energy," in line for line in lines[1:])

    def test_no_spec(self, run_dir: Path, tmp_path: Path) -> None:
        with pytest.raises(ConfigError):
            replay(run_dir, " ; ", tmp_path / "x.csv")


class TestCmdMonitor:
    def test_monitor_never_armed(self, tmp_path: Path, swirl_state: FlowState) -> None:
        SnapshotStore(tmp_path).create(swirl_state, 0, swirl_state.t, 1.0)
        response = cmd_monitor(tmp_path, "thm12 @ r=0.4")
        assert response.status_code == ExitStatus.RETENTION_ERROR
        assert response.data["monitor"] == "thm12 @ r=0.4"

    def test_corrupt_snapshot(self, tmp_path: Path, swirl_state: FlowState) -> None:
        path = SnapshotStore(tmp_path).create(swirl_state, 0, swirl_state.t, 1.0)
        data = bytearray(path.read_bytes())
        data[-1] ^= 0xFF
        path.write_bytes(bytes(data))
        response = cmd_monitor(tmp_path, "energy")
        assert response.status_code == ExitStatus.SNAPSHOT_ERROR

    def test_no_snapshots(self, tmp_path: Path) -> None:
        response = cmd_monitor(tmp_path, "energy")
        assert response.status_code == ExitStatus.SNAPSHOT_ERROR

    def test_unknown_monitor(self, tmp_path: Path) -> None:
        response = cmd_monitor(tmp_path, "thm99")
        assert response.status_code == ExitStatus.CONFIG_ERROR
        assert response.data["key"] == "monitors.thm99"
