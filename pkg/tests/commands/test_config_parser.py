import pytest

from src.commands import parse_config, parse_monitor_spec, parse_monitor_specs
from src.errors import ConfigError
from tests.fixtures.commands import SMALL_GRID, config_text


class TestParseConfig:
    def test_defaults(self) -> None:
        config = parse_config(SMALL_GRID + "[run]\nt_end = 1.0\n")
        assert config.cfl_advective == 0.4
        assert config.cfl_diffusive == 0.5
        assert config.snapshot_stride == 10
        assert config.initial.family == "zero"
        assert config.retention is None
        assert config.monitors == []
        assert config.grid.n_r == 9

    def test_full_config(self) -> None:
        config = parse_config(
            config_text(
                "swirl-gaussian", ("thm12 @ r=0.4,z=0", "lambda"), retention=1.5
            )
        )
        assert config.initial.family == "swirl-gaussian"
        assert config.retention == 1.5
        assert [spec.name for spec in config.monitors] == ["thm12", "lambda"]
        assert config.monitors[0].params == {"r": 0.4, "z": 0.0}

    def test_initial_params(self) -> None:
        text = config_text("vortex-ring").replace(
            "family = vortex-ring", "family = vortex-ring\namplitude = 2.5\nwidth = 0.25"
        )
        config = parse_config(text)
        assert config.initial.params == {"amplitude": 2.5, "width": 0.25}

    def test_override(self) -> None:
        config = parse_config(config_text(), ["run.t_end=0.5", "grid.n_z = 17"])
        assert config.t_end == 0.5
        assert config.grid.n_z == 17

    def test_override_adds_section(self) -> None:
        config = parse_config(SMALL_GRID + "[run]\nt_end = 1.0\n", ["initial.family=rigid-swirl"])
        assert config.initial.family == "rigid-swirl"

    def test_comments(self) -> None:
        config = parse_config(config_text().replace("t_end = 0.125", "t_end = 0.25  # short"))
        assert config.t_end == 0.25

    @pytest.mark.parametrize(
        "text, key",
        [
            (SMALL_GRID.replace("n_r = 9", "n_r = -4"), "grid.n_r"),
            (SMALL_GRID.replace("n_r = 9", "n_r = 4"), "grid.n_r"),
            (SMALL_GRID.replace("r_min = 0.5", "r_min = 0.0"), "grid.r_min"),
            (SMALL_GRID.replace("n_z = 9", "n_z = many"), "grid.n_z"),
            (SMALL_GRID + "[run]\nt_end = 1.0\nfoo = 1\n", "run.foo"),
            (SMALL_GRID + "[run]\nsnapshot_stride = 2\n", "run.t_end"),
            (SMALL_GRID + "[run]\nt_end = -1\n", "run.t_end"),
            (SMALL_GRID + "[run]\nt_end = 1\ncfl_advective = 1.5\n", "run.cfl_advective"),
            (SMALL_GRID + "[run]\nt_end = 1\nforcing = heat\n", "run.forcing"),
            (SMALL_GRID + "[run]\nt_end = 1\ngrid = x\n", "run.grid"),
            (SMALL_GRID + "[initial]\nfamily = hill\n[run]\nt_end = 1\n", "initial.family"),
            (SMALL_GRID + "[initial]\namplitude = big\n[run]\nt_end = 1\n", "initial.amplitude"),
            (SMALL_GRID + "[output]\nroot = x\n[run]\nt_end = 1\n", "output"),
            ("[run]\nt_end = 1\n", "grid"),
            ("t_end = 1\n", "config"),
            (SMALL_GRID + "[run]\nt_end = 1\n[monitors]\nplot = yes\n", "monitors.plot"),
        ],
    )
    def test_errors_name_key(self, text: str, key: str) -> None:
        with pytest.raises(ConfigError) as e:
            parse_config(text)
        assert e.value.key == key

    @pytest.mark.parametrize("override", ["t_end=1", "run.t_end", "run.=1"])
    def test_malformed_override(self, override: str) -> None:
        with pytest.raises(ConfigError, match="section.key=value"):
            parse_config(config_text(), [override])


class TestParseMonitorSpec:
    def test_bare_name(self) -> None:
        spec = parse_monitor_spec("energy")
        assert spec.name == "energy"
        assert spec.params == {}

    def test_params(self) -> None:
        spec = parse_monitor_spec(" thm12 @ r = 0.4 , z=0 ")
        assert spec.params == {"r": 0.4, "z": 0.0}
        assert spec.label == "thm12 @ r=0.4,z=0.0"

    @pytest.mark.parametrize(
        "text, key",
        [
            ("thm13 @ r=0.4", "monitors.thm13"),
            ("thm12 @ r", "monitors.thm12"),
            ("thm12 @ =0.4", "monitors.thm12"),
            ("thm12 @ r=abc", "monitors.thm12.r"),
            ("@ r=0.4", "monitors.monitor"),
        ],
    )
    def test_errors(self, text: str, key: str) -> None:
        with pytest.raises(ConfigError) as e:
            parse_monitor_spec(text)
        assert e.value.key == key

    def test_separators(self) -> None:
        specs = parse_monitor_specs("vz; energy\n\nkbar @ R=0.25;")
        assert [spec.name for spec in specs] == ["vz", "energy", "kbar"]
        assert specs[2].params == {"R": 0.25}

    def test_empty(self) -> None:
        assert parse_monitor_specs(" ; \n") == []
