"""
Time loop of a run.
"""

import logging
from typing import Callable, Optional

from src.config import Config
from src.elliptic import StreamSolver
from src.evolution.initial_conditions import InitialState, initial_state
from src.evolution.manufactured import ManufacturedSolution, manufactured
from src.evolution.run_config import RunConfig
from src.evolution.stepper import BoundaryData, DumpCallback, cfl_dt, step
from src.fields import FlowState

logger = logging.getLogger(__name__)

SnapshotCallback = Callable[[int, FlowState], None]

# Remaining time below which a run counts as finished, relative to t_end.
_END_SLACK = 1.0e-12


class Simulation:
    """
    A configured run: initial state, forcing, boundary data and the CFL loop.

    Args:
        config (RunConfig): The run configuration.
        solver (StreamSolver | None): Stream solver, one per grid by default.
    """

    def __init__(self, config: RunConfig, solver: Optional[StreamSolver] = None) -> None:
        self.config = config
        self.solver = solver or StreamSolver(config.grid)
        self.forcing: Optional[ManufacturedSolution] = (
            manufactured(config.forcing) if config.forcing else None
        )

    def initial(self) -> InitialState:
        return initial_state(self.config.initial, self.config.grid, self.solver)

    def run(
        self,
        start: InitialState,
        on_snapshot: Optional[SnapshotCallback] = None,
        dump: Optional[DumpCallback] = None,
    ) -> FlowState:
        """
        Step from the start state to ``t_end``.

        ``on_snapshot`` receives the start state as step 0, every
        ``snapshot_stride``-th step and the final step.

        Args:
            start (InitialState): Where the run begins.
            on_snapshot (SnapshotCallback | None): Snapshot consumer.
            dump (DumpCallback | None): Blow-up dump writer.

        Returns:
            FlowState: The state at ``t_end``.

        Raises:
            BlowUpError: If the run produces non-finite values.
            EllipticConvergenceError: If a stream solve fails.
        """
        config = self.config
        boundary = (
            BoundaryData.from_solution(self.forcing)
            if self.forcing is not None
            else BoundaryData.from_state(start.state)
        )
        state = start.state
        n = 0
        logger.info(
            "Run start t=%r t_end=%r grid=%dx%d",
            state.t,
            config.t_end,
            config.grid.n_r,
            config.grid.n_z,
        )
        if on_snapshot is not None:
            on_snapshot(n, state)
        slack = _END_SLACK * max(1.0, abs(config.t_end))
        while config.t_end - state.t > slack:
            if n >= Config.RUN.MAX_STEPS:
                logger.warning("Stopping at the step cap %d", Config.RUN.MAX_STEPS)
                break
            dt = min(
                cfl_dt(state, config.cfl_advective, config.cfl_diffusive),
                config.t_end - state.t,
            )
            state = step(
                state,
                dt,
                self.forcing,
                solver=self.solver,
                boundary=boundary,
                dump=dump,
            )
            n += 1
            finished = config.t_end - state.t <= slack
            if on_snapshot is not None and (
                n % config.snapshot_stride == 0 or finished
            ):
                on_snapshot(n, state)
        logger.info("Run stop t=%r after %d steps", state.t, n)
        return state
