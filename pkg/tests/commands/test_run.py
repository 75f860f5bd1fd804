from pathlib import Path

import numpy as np
import pytest
from pytest_mock import MockerFixture

from src.commands import cmd_run, read_config
from src.config import Config
from src.elliptic import StreamSolver
from src.errors import ConfigError, EllipticConvergenceError
from src.storage import MonitorSeries, SnapshotStore, read_snapshot
from src.utils.responses import ExitStatus
from tests.fixtures.commands import config_text


def _write(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "run.ini"
    path.write_text(text)
    return path


class TestReadConfig:
    def test_reads_file(self, config_file: Path) -> None:
        config = read_config(config_file, ["run.t_end=0.25"])
        assert config.t_end == 0.25
        assert [spec.name for spec in config.monitors] == ["vz", "energy"]

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigError) as e:
            read_config(tmp_path / "absent.ini")
        assert e.value.key == "config"


class TestCmdRun:
    def test_rigid_swirl(self, config_file: Path, tmp_path: Path) -> None:
        output = tmp_path / "out"
        response = cmd_run(config_file, output)
        assert response.ok
        assert response.data["t"] == pytest.approx(0.125)
        assert response.data["snapshots"] == 5

        snapshots = SnapshotStore(output).get_by_query()
        assert [header.step for header, _ in snapshots] == [0, 1, 2, 3, 4]
        first = snapshots[0][1]
        for _, state in snapshots[1:]:
            assert np.allclose(
                state.gamma.values, first.gamma.values, rtol=0.0, atol=1e-10
            )

        rows = MonitorSeries(output / Config.OUTPUT.MONITOR_SERIES).read()
        assert len(rows) == 10
        assert {row.monitor for row in rows} == {"vz", "energy"}

    def test_csv_header(self, config_file: Path, tmp_path: Path) -> None:
        cmd_run(config_file, tmp_path / "out")
        header = (tmp_path / "out" / Config.OUTPUT.MONITOR_SERIES).read_text().splitlines()[0]
        assert header == "time,monitor,point_or_region,lhs,rhs,implied_constant,clipped"

    def test_overrides(self, config_file: Path, tmp_path: Path) -> None:
        response = cmd_run(config_file, tmp_path / "out", ["run.snapshot_stride=2"])
        assert response.ok
        assert response.data["snapshots"] == 3

    def test_retention_too_short(self, tmp_path: Path) -> None:
        path = _write(tmp_path, config_text(monitors=("thm12 @ r=0.4,z=0",), retention=0.1))
        response = cmd_run(path, tmp_path / "out")
        assert response.status_code == ExitStatus.RETENTION_ERROR
        assert response.data["monitor"] == "thm12 @ r=0.4,z=0.0"

    def test_blow_up_dumps_state(
        self, config_file: Path, tmp_path: Path, mocker: MockerFixture
    ) -> None:
        mocker.patch(
            "src.evolution.stepper.gamma_tendency",
            side_effect=lambda gamma, *args: np.full_like(gamma, np.nan),
        )
        output = tmp_path / "out"
        response = cmd_run(config_file, output)
        assert response.status_code == ExitStatus.BLOW_UP
        dump = Path(response.data["dump"])
        assert dump == output / Config.OUTPUT.BLOWUP_DUMP
        header, state = read_snapshot(dump)
        assert header.step == -1
        assert state.t == 0.0

    def test_elliptic_failure(
        self, config_file: Path, tmp_path: Path, mocker: MockerFixture
    ) -> None:
        mocker.patch.object(
            StreamSolver,
            "solve",
            side_effect=EllipticConvergenceError("stream solve did not converge", 1.0),
        )
        response = cmd_run(config_file, tmp_path / "out")
        assert response.status_code == ExitStatus.ELLIPTIC_FAILURE
        assert response.data["error"] == "EllipticConvergenceError"

    def test_missing_config(self, tmp_path: Path) -> None:
        response = cmd_run(tmp_path / "absent.ini", tmp_path / "out")
        assert response.status_code == ExitStatus.CONFIG_ERROR
        assert response.data["key"] == "config"

    def test_invalid_config(self, tmp_path: Path) -> None:
        path = _write(tmp_path, config_text(t_end=-1))
        response = cmd_run(path, tmp_path / "out")
        assert response.status_code == ExitStatus.CONFIG_ERROR
        assert response.data["key"] == "run.t_end"
