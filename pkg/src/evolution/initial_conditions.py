"""
Initial conditions: analytic families, manufactured fields at t = 0 and
restarts from snapshot files.
"""

import logging
from typing import Callable, Optional

import numpy as np

from src.elliptic import StreamSolver, close_state
from src.errors import ConfigError
from src.evolution.manufactured import manufactured
from src.evolution.run_config import InitialConditionSpec
from src.fields import FlowState, ScalarField
from src.geometry import Grid
from src.models import BaseModel
from src.storage import read_snapshot

logger = logging.getLogger(__name__)

FamilyBuilder = Callable[[Grid, dict[str, float]], tuple[np.ndarray, np.ndarray]]


class InitialState(BaseModel):
    """
    Starting point of a run.

    Attributes:
        state: The state at the start time.
        t0: Start time of the original run.
        m0: ||Gamma(t0)||_inf of the original run.
    """

    state: FlowState
    t0: float
    m0: float


def _taper(grid: Grid) -> np.ndarray:
    """sin^2 profile vanishing at r_min and r_max."""
    return np.sin(np.pi * (grid.rr - grid.r_min) / (grid.r_max - grid.r_min)) ** 2


def _zero(grid: Grid, params: dict[str, float]) -> tuple[np.ndarray, np.ndarray]:
    return np.zeros(grid.shape), np.zeros(grid.shape)


def _swirl_gaussian(
    grid: Grid, params: dict[str, float]
) -> tuple[np.ndarray, np.ndarray]:
    amplitude = params.get("amplitude", 1.0)
    z0 = params.get("z0", 0.0)
    width = params.get("width", 1.0)
    envelope = np.exp(-(((grid.zz - z0) / width) ** 2))
    gamma = amplitude * grid.rr**2 * envelope * _taper(grid)
    return gamma, np.zeros(grid.shape)


def _vortex_ring(grid: Grid, params: dict[str, float]) -> tuple[np.ndarray, np.ndarray]:
    amplitude = params.get("amplitude", 1.0)
    r0 = params.get("r0", 0.5 * (grid.r_min + grid.r_max))
    z0 = params.get("z0", 0.0)
    width = params.get("width", 0.5)
    distance2 = (grid.rr - r0) ** 2 + (grid.zz - z0) ** 2
    omega = amplitude * np.exp(-distance2 / width**2) * _taper(grid)
    return np.zeros(grid.shape), omega


def _rigid_swirl(grid: Grid, params: dict[str, float]) -> tuple[np.ndarray, np.ndarray]:
    return params.get("amplitude", 1.0) * grid.rr**2, np.zeros(grid.shape)


FAMILY_BUILDERS: dict[str, tuple[FamilyBuilder, frozenset[str]]] = {
    "zero": (_zero, frozenset()),
    "swirl-gaussian": (_swirl_gaussian, frozenset({"amplitude", "z0", "width"})),
    "vortex-ring": (_vortex_ring, frozenset({"amplitude", "r0", "z0", "width"})),
    "rigid-swirl": (_rigid_swirl, frozenset({"amplitude"})),
}


def _check_params(spec: InitialConditionSpec, allowed: frozenset[str]) -> None:
    for key in spec.params:
        if key not in allowed:
            raise ConfigError(
                f"initial.{key}", f"not a parameter of family {spec.family}"
            )


def initial_state(
    spec: InitialConditionSpec, grid: Grid, solver: Optional[StreamSolver] = None
) -> InitialState:
    """
    Build the state a run starts from.

    Analytic and manufactured families start at t = 0 with L_theta solved from
    r * Omega0; a snapshot restart reuses the stored state and the stored t0, M0.

    Args:
        spec (InitialConditionSpec): The initial condition.
        grid (Grid): Grid of the run.
        solver (StreamSolver | None): Stream solver for the grid.

    Returns:
        InitialState: The state with its run origin.

    Raises:
        ConfigError: On unknown family parameters or a snapshot on another grid.
        SnapshotError: If the snapshot file is unreadable.
    """
    prefix, _, rest = spec.family.partition(":")
    if prefix == "snapshot":
        _check_params(spec, frozenset())
        header, state = read_snapshot(rest)
        if header.grid != grid:
            raise ConfigError("initial.family", f"snapshot {rest} lies on another grid")
        logger.info("Restarting from %s at t=%r", rest, state.t)
        return InitialState(state=state, t0=header.t0, m0=header.m0)

    solver = solver or StreamSolver(grid)
    stream_bc: Optional[ScalarField] = None
    if prefix == "manufactured":
        _check_params(spec, frozenset())
        solution = manufactured(rest)
        gamma = solution.evaluate("gamma", grid, 0.0)
        omega = solution.evaluate("omega", grid, 0.0)
        stream_bc = solution.field("stream", grid, 0.0)
    else:
        builder, allowed = FAMILY_BUILDERS[spec.family]
        _check_params(spec, allowed)
        gamma, omega = builder(grid, spec.params)
    state, _ = close_state(
        0.0,
        ScalarField.from_array(grid, gamma, "gamma"),
        ScalarField.from_array(grid, omega, "omega"),
        solver,
        stream_bc,
    )
    return InitialState(state=state, t0=0.0, m0=state.gamma.max_abs())
