import pytest
from pydantic import ValidationError

from src.config import Config
from src.evolution import InitialConditionSpec, MonitorSpec, RunConfig
from src.geometry import Grid


class TestInitialConditionSpec:
    @pytest.mark.parametrize(
        "family",
        [
            "zero",
            "swirl-gaussian",
            "vortex-ring",
            "rigid-swirl",
            "manufactured:coupled",
            "snapshot:out/snap_00000000.axs",
        ],
    )
    def test_valid(self, family: str) -> None:
        assert InitialConditionSpec(family=family).family == family

    @pytest.mark.parametrize(
        "family", ["hill-vortex", "manufactured:nope", "snapshot:", "manufactured"]
    )
    def test_invalid(self, family: str) -> None:
        with pytest.raises(ValueError):
            InitialConditionSpec(family=family)


class TestMonitorSpec:
    def test_label(self) -> None:
        spec = MonitorSpec(name="thm12", params={"r": 0.4, "z": 0.0})
        assert spec.label == "thm12 @ r=0.4,z=0.0"
        assert MonitorSpec(name="vz").label == "vz"

    def test_unknown_monitor(self) -> None:
        with pytest.raises(ValidationError):
            MonitorSpec(name="thm13")  # type: ignore[arg-type]


class TestRunConfig:
    def test_defaults(self, small_grid: Grid) -> None:
        config = RunConfig(grid=small_grid, t_end=0.1)
        assert config.cfl_advective == Config.RUN.CFL_ADVECTIVE
        assert config.cfl_diffusive == Config.RUN.CFL_DIFFUSIVE
        assert config.snapshot_stride == Config.RUN.SNAPSHOT_STRIDE
        assert config.initial.family == "zero"
        assert config.retention is None
        assert config.monitors == []

    @pytest.mark.parametrize(
        "override",
        [
            {"t_end": 0.0},
            {"t_end": -1.0},
            {"cfl_advective": 1.5},
            {"cfl_diffusive": 0.0},
            {"snapshot_stride": 0},
            {"viscosity": 2.0},
            {"forcing": "hill-vortex"},
            {"retention": -1.0},
        ],
    )
    def test_invalid(self, small_grid: Grid, override: dict) -> None:
        with pytest.raises(ValueError):
            RunConfig(**{"grid": small_grid, "t_end": 0.1, **override})

    def test_forcing(self, small_grid: Grid) -> None:
        assert RunConfig(grid=small_grid, t_end=0.1, forcing="coupled").forcing == "coupled"
