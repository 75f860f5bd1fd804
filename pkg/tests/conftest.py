from .fixtures.commands import config_file
from .fixtures.evolution import near_axis_trajectory, single_snapshot, trajectory
from .fixtures.fields import (
    near_axis_state,
    small_state,
    swirl_state,
    zero_state,
)
from .fixtures.geometry import grid, near_axis_grid, periodic_grid, small_grid
