from .initial_conditions import FAMILY_BUILDERS, InitialState, initial_state
from .manufactured import FAMILIES, ManufacturedSolution, manufactured
from .rhs import rhs_gamma, rhs_omega
from .run_config import InitialConditionSpec, MonitorSpec, RunConfig
from .simulation import Simulation
from .stepper import BoundaryData, cfl_dt, step
from .trajectory import Trajectory

__all__ = [
    "FAMILIES",
    "FAMILY_BUILDERS",
    "BoundaryData",
    "InitialConditionSpec",
    "InitialState",
    "ManufacturedSolution",
    "MonitorSpec",
    "RunConfig",
    "Simulation",
    "Trajectory",
    "cfl_dt",
    "initial_state",
    "manufactured",
    "rhs_gamma",
    "rhs_omega",
    "step",
]
