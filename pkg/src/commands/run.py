"""
The ``run`` command: simulate a configured flow, store snapshots and the
monitor time series.
"""

import logging
import os
from pathlib import Path
from typing import Iterable, Optional, Union

from src.commands.config_parser import parse_config
from src.config import Config
from src.diagnostics import (
    build_plans,
    check_retention,
    evaluate_plans,
    required_retention,
)
from src.errors import AxiswirlError, ConfigError
from src.evolution import RunConfig, Simulation, Trajectory
from src.fields import FlowState
from src.storage import MonitorSeries, SnapshotStore, write_snapshot
from src.utils.responses import CommandResponse

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike[str]]


def read_config(path: PathLike, overrides: Iterable[str] = ()) -> RunConfig:
    """
    Read and parse a configuration file.

    Raises:
        ConfigError: If the file cannot be read or does not validate.
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ConfigError("config", f"cannot read {path}: {e}") from e
    return parse_config(text, overrides)


def execute(config: RunConfig, output: PathLike) -> dict[str, object]:
    """
    Run a simulation with in-run monitoring.

    Snapshots are written at step 0, every ``snapshot_stride`` steps and at
    the final step; the monitors are evaluated on the retained trajectory of
    written snapshots, so an offline replay of the files reproduces them.

    Args:
        config (RunConfig): The run.
        output (PathLike): Output directory.

    Returns:
        dict[str, object]: Final time, snapshot count and file locations.

    Raises:
        RetentionError: If a monitor needs more history than ``retention``.
        BlowUpError: If the run blows up; the last finite state is dumped.
        EllipticConvergenceError: If a stream solve fails.
    """
    output = Path(output)
    plans = build_plans(config.monitors)
    check_retention(plans, config.retention)
    retention = (
        config.retention if config.retention is not None else required_retention(plans)
    )

    logger.info(
        "%s %s: running to t=%r on a %dx%d grid",
        Config.APP.TITLE,
        Config.APP.VERSION,
        config.t_end,
        config.grid.n_r,
        config.grid.n_z,
    )
    simulation = Simulation(config)
    start = simulation.initial()
    store = SnapshotStore(output)
    series = MonitorSeries(output / Config.OUTPUT.MONITOR_SERIES)
    series.create()
    trajectory = Trajectory(retention, start.t0, start.m0)
    written: list[int] = []

    def on_snapshot(n: int, state: FlowState) -> None:
        store.create(state, n, start.t0, start.m0)
        written.append(n)
        trajectory.append(state)
        series.append(report.row() for report in evaluate_plans(plans, trajectory))

    def dump(state: FlowState) -> str:
        path = write_snapshot(
            output / Config.OUTPUT.BLOWUP_DUMP, state, -1, start.t0, start.m0
        )
        logger.error("Blow-up: last finite state at t=%r dumped to %s", state.t, path)
        return str(path)

    final = simulation.run(start, on_snapshot=on_snapshot, dump=dump)
    return {
        "t": final.t,
        "snapshots": len(written),
        "output": str(output),
        "monitors": str(series.path),
    }


def cmd_run(
    config_path: PathLike,
    output: Optional[PathLike] = None,
    overrides: Iterable[str] = (),
) -> CommandResponse:
    """
    command: run <config>
    Simulate the configured flow.

    Args:
        config_path (PathLike): Configuration file.
        output (PathLike | None): Output directory, ``Config.OUTPUT.ROOT`` by default.
        overrides (Iterable[str]): ``section.key=value`` assignments.

    Returns:
        CommandResponse: Exit status 0 with the run summary, or the status
        of the error that stopped the run.
    """
    try:
        config = read_config(config_path, overrides)
        data = execute(config, output or Config.OUTPUT.ROOT)
    except AxiswirlError as e:
        logger.error("Run failed: %s", e)
        return CommandResponse.from_error(e)
    return CommandResponse(message=f"Run finished at t={data['t']!r}", data=data)
