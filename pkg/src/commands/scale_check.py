"""
The ``scale-check`` command: scaling identities on stored snapshots.
"""

import csv
import logging
import os
from pathlib import Path
from typing import Optional, Sequence, Union

from src.config import Config
from src.diagnostics import ScalingIdentity, nested_scale, scaling_check
from src.errors import AxiswirlError, SnapshotError
from src.evolution import Trajectory
from src.geometry import parabolic
from src.storage import SnapshotStore
from src.utils.responses import CommandResponse

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike[str]]

SCALING_COLUMNS = ("identity", "expected_factor", "ratio", "relative_error")


def load_trajectory(directory: PathLike) -> Trajectory:
    """
    All snapshots of a run directory as one unbounded trajectory.

    Raises:
        SnapshotError: If there are no snapshots or they are inconsistent.
    """
    snapshots = SnapshotStore(directory).get_by_query()
    if not snapshots:
        raise SnapshotError(f"no snapshots in {directory}")
    first, _ = snapshots[0]
    trajectory = Trajectory(None, first.t0, first.m0)
    for _, state in snapshots:
        trajectory.append(state)
    return trajectory


def write_identities(path: PathLike, identities: Sequence[ScalingIdentity]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SCALING_COLUMNS)
        for identity in identities:
            writer.writerow(
                [
                    identity.name,
                    repr(identity.expected_factor),
                    repr(identity.ratio),
                    repr(identity.relative_error),
                ]
            )
    return path


def cmd_scale_check(
    directory: PathLike, k: float, output: Optional[PathLike] = None
) -> CommandResponse:
    """
    command: scale-check <dir> <k>
    Check the rescaling identities by a power-of-two k on stored snapshots.

    The latest snapshot is the window end. When the retained snapshots
    do not cover the window, it is frozen over the window instead.

    Args:
        directory (PathLike): Run directory.
        k (float): Power-of-two scale factor.
        output (PathLike | None): Output directory, the run directory by default.

    Returns:
        CommandResponse: The table location and the largest relative error.
    """
    try:
        k = nested_scale(float(k))
        trajectory = load_trajectory(directory)
        latest = trajectory.latest
        region = parabolic(1.0, 4.0, 1.0)
        covered = trajectory.covers(region.time_window(latest.t)[0])
        identities = scaling_check(trajectory if covered else latest, k, region)
        path = write_identities(
            Path(output or directory) / Config.SCALING.TABLE_PATTERN.format(k=k),
            identities,
        )
    except AxiswirlError as e:
        logger.error("Scaling check failed: %s", e)
        return CommandResponse.from_error(e)
    worst = max(identity.relative_error for identity in identities)
    return CommandResponse(
        message=f"Scaling table written to {path}",
        data={"table": str(path), "max_relative_error": worst, "frozen": not covered},
    )
