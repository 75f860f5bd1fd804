"""
The ``monitor`` command: evaluate monitors offline on stored snapshots.
"""

import logging
import os
from pathlib import Path
from typing import Optional, Union

from src.commands.config_parser import parse_monitor_specs
from src.diagnostics import build_plans, evaluate_plans, required_retention
from src.errors import AxiswirlError, ConfigError, RetentionError, SnapshotError
from src.evolution import Trajectory
from src.storage import MonitorSeries, SnapshotStore
from src.utils.responses import CommandResponse

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike[str]]

OFFLINE_SERIES = "monitors_offline.csv"


def replay(directory: PathLike, spec_text: str, output: PathLike) -> dict[str, object]:
    """
    Replay stored snapshots through the monitors, in step order.

    The trajectory is rebuilt with the run's t0 and M0 from the snapshot
    headers, so the rows match the in-run series exactly.

    Args:
        directory (PathLike): Run directory holding the snapshot files.
        spec_text (str): Monitor specs separated by newlines or semicolons.
        output (PathLike): CSV file to write.

    Returns:
        dict[str, object]: Snapshot and row counts and the CSV location.

    Raises:
        SnapshotError: If there are no snapshots, a checksum fails or the
            timestamps are not increasing.
        RetentionError: If a requested monitor never arms.
    """
    specs = parse_monitor_specs(spec_text)
    if not specs:
        raise ConfigError("monitors", "no monitor given")
    snapshots = SnapshotStore(directory).get_by_query()
    if not snapshots:
        raise SnapshotError(f"no snapshots in {directory}")
    first, _ = snapshots[0]
    plans = build_plans(specs)
    trajectory = Trajectory(required_retention(plans), first.t0, first.m0)
    series = MonitorSeries(output)
    series.create()
    emitted = {plan.spec.label: 0 for plan in plans}
    rows = 0
    for _, state in snapshots:
        trajectory.append(state)
        reports = []
        for plan in plans:
            report = plan.evaluate(trajectory)
            if report is not None:
                emitted[plan.spec.label] += 1
                reports.append(report)
        series.append(report.row() for report in reports)
        rows += len(reports)
    for plan in plans:
        if not emitted[plan.spec.label]:
            available = snapshots[-1][0].t - first.t0
            raise RetentionError(plan.spec.label, plan.lookback, available)
    return {"snapshots": len(snapshots), "rows": rows, "monitors": str(series.path)}


def cmd_monitor(
    directory: PathLike, spec_text: str, output: Optional[PathLike] = None
) -> CommandResponse:
    """
    command: monitor <dir> <spec>
    Evaluate monitors on the snapshots of a finished run.

    Args:
        directory (PathLike): Run directory.
        spec_text (str): Monitor specs, ``name @ key=value,...``.
        output (PathLike | None): CSV file, ``<dir>/monitors_offline.csv`` by default.

    Returns:
        CommandResponse: Exit status and the CSV location.
    """
    try:
        data = replay(directory, spec_text, output or Path(directory) / OFFLINE_SERIES)
    except AxiswirlError as e:
        logger.error("Monitor replay failed: %s", e)
        return CommandResponse.from_error(e)
    return CommandResponse(
        message=f"Evaluated {data['rows']} monitor rows on {data['snapshots']} snapshots",
        data=data,
    )
