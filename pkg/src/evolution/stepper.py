"""
Explicit two-stage strong-stability-preserving Runge-Kutta stepping.

After each stage the Dirichlet values are imposed, L_theta is re-solved from
r * Omega and the velocity is rebuilt from it.
"""

import logging
from typing import Callable, Optional

import numpy as np

from src.config import Config
from src.elliptic import StreamSolver, close_state
from src.errors import BlowUpError, FieldError, StepSizeError
from src.evolution.manufactured import ManufacturedSolution
from src.evolution.rhs import gamma_tendency, omega_tendency
from src.fields import FlowState, ScalarField
from src.geometry import Grid
from src.models import BaseModel

logger = logging.getLogger(__name__)

DumpCallback = Callable[[FlowState], str]


class BoundaryData(BaseModel):
    """
    Dirichlet values of Gamma, Omega and L_theta on non-periodic boundaries.

    Values come from a manufactured solution at the stage time, or are held
    at the node values of a reference state.

    Attributes:
        solution: Manufactured family supplying time-dependent values.
        held: Reference state supplying constant values.
    """

    solution: Optional[ManufacturedSolution] = None
    held: Optional[FlowState] = None

    @classmethod
    def from_state(cls, state: FlowState) -> "BoundaryData":
        return cls(held=state)

    @classmethod
    def from_solution(cls, solution: ManufacturedSolution) -> "BoundaryData":
        return cls(solution=solution)

    def at(self, grid: Grid, t: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(Gamma, Omega, L_theta) node arrays whose boundary entries are the data."""
        if self.solution is not None:
            return (
                self.solution.evaluate("gamma", grid, t),
                self.solution.evaluate("omega", grid, t),
                self.solution.evaluate("stream", grid, t),
            )
        if self.held is None:
            raise ValueError("boundary data needs a solution or a held state")
        return (
            self.held.gamma.values,
            self.held.omega.values,
            self.held.stream.values,
        )


def cfl_dt(
    state: FlowState,
    cfl_advective: float = Config.RUN.CFL_ADVECTIVE,
    cfl_diffusive: float = Config.RUN.CFL_DIFFUSIVE,
) -> float:
    """
    Largest stable time step.

    Args:
        state (FlowState): Flow with fresh derived fields.
        cfl_advective (float): Advective CFL factor.
        cfl_diffusive (float): Diffusive CFL factor.

    Returns:
        float: min(cfl_advective h / max|b|, cfl_diffusive h^2 / 4), with
        h = min(h_r, h_z) and max|b| floored at ``Config.RUN.VELOCITY_FLOOR``.
    """
    h = state.grid.h
    speed = max(
        float(np.max(np.abs(state.v_r.values))),
        float(np.max(np.abs(state.v_z.values))),
        Config.RUN.VELOCITY_FLOOR,
    )
    return min(cfl_advective * h / speed, cfl_diffusive * h * h / 4.0)


def _tendencies(
    state: FlowState, forcing: Optional[ManufacturedSolution]
) -> tuple[np.ndarray, np.ndarray]:
    grid = state.grid
    d_gamma = gamma_tendency(
        state.gamma.values, state.v_r.values, state.v_z.values, grid
    )
    d_omega = omega_tendency(
        state.omega.values,
        state.gamma.values,
        state.v_r.values,
        state.v_z.values,
        grid,
    )
    if forcing is not None:
        d_gamma = d_gamma + forcing.evaluate("forcing_gamma", grid, state.t)
        d_omega = d_omega + forcing.evaluate("forcing_omega", grid, state.t)
    return d_gamma, d_omega


def step(
    state: FlowState,
    dt: float,
    forcing: Optional[ManufacturedSolution] = None,
    *,
    solver: Optional[StreamSolver] = None,
    boundary: Optional[BoundaryData] = None,
    dump: Optional[DumpCallback] = None,
) -> FlowState:
    """
    Advance a state by one SSP-RK2 step.

    Args:
        state (FlowState): Current state with fresh derived fields.
        dt (float): Time step, positive and at most ``cfl_dt(state, 1.0, 1.0)``.
        forcing (ManufacturedSolution | None): Adds the family's forcing terms.
        solver (StreamSolver | None): Stream solver for the grid.
        boundary (BoundaryData | None): Dirichlet data; the manufactured
            values when forced, otherwise the current boundary values.
        dump (DumpCallback | None): Writes the last finite state on blow-up
            and returns its path.

    Returns:
        FlowState: The state at t + dt with fresh derived fields.

    Raises:
        StepSizeError: If dt is not positive or exceeds the stability limit.
        BlowUpError: If a stage or its stream solve produces non-finite values.
        EllipticConvergenceError: If a stream solve fails.
    """
    limit = cfl_dt(state, 1.0, 1.0)
    if not 0.0 < dt <= limit * (1.0 + 1e-12):
        raise StepSizeError(dt, limit)
    grid = state.grid
    solver = solver or StreamSolver(grid)
    if boundary is None:
        boundary = (
            BoundaryData.from_solution(forcing)
            if forcing is not None
            else BoundaryData.from_state(state)
        )
    t_new = state.t + dt
    edge = grid.boundary_mask()

    def _blow_up() -> BlowUpError:
        path = dump(state) if dump is not None else None
        logger.error("Blow-up at t=%r", t_new)
        return BlowUpError(t_new, path)

    def _close(gamma: np.ndarray, omega: np.ndarray) -> FlowState:
        if not (np.all(np.isfinite(gamma)) and np.all(np.isfinite(omega))):
            raise _blow_up()
        gamma_bc, omega_bc, stream_bc = boundary.at(grid, t_new)
        gamma = np.where(edge, gamma_bc, gamma)
        omega = np.where(edge, omega_bc, omega)
        try:
            closed, _ = close_state(
                t_new,
                ScalarField.from_array(grid, gamma, "gamma"),
                ScalarField.from_array(grid, omega, "omega"),
                solver,
                ScalarField.from_array(grid, stream_bc, "stream_bc"),
            )
        except FieldError as e:
            raise _blow_up() from e
        return closed

    d_gamma, d_omega = _tendencies(state, forcing)
    stage = _close(
        state.gamma.values + dt * d_gamma, state.omega.values + dt * d_omega
    )
    d_gamma, d_omega = _tendencies(stage, forcing)
    return _close(
        0.5 * (state.gamma.values + stage.gamma.values + dt * d_gamma),
        0.5 * (state.omega.values + stage.omega.values + dt * d_omega),
    )
