from typing import Callable

import pytest

from src.diagnostics import (
    BoundReport,
    biot_savart_monitor,
    oscillation_check,
    thm12_monitor,
)
from src.geometry import Grid, make_grid
from src.utils.data import ValidData
from tests.fixtures.evolution import decaying_trajectory

LEVELS = [(17, 33), (33, 65), (65, 129)]

Domain = Callable[[int, int], Grid]
Monitor = Callable[[Grid], BoundReport]


def _cylinder_grid(n_r: int, n_z: int) -> Grid:
    return make_grid(
        ValidData.Grid.r_min,
        ValidData.Grid.r_max,
        ValidData.Grid.z_min,
        ValidData.Grid.z_max,
        n_r,
        n_z,
    )


def _near_axis_grid(n_r: int, n_z: int) -> Grid:
    return make_grid(
        ValidData.NearAxisGrid.r_min,
        ValidData.NearAxisGrid.r_max,
        ValidData.NearAxisGrid.z_min,
        ValidData.NearAxisGrid.z_max,
        n_r,
        n_z,
    )


def _oscillation(grid: Grid) -> BoundReport:
    return oscillation_check(decaying_trajectory(grid, [0.0]).latest)


def _biot_savart(grid: Grid) -> BoundReport:
    state = decaying_trajectory(grid, [0.0]).latest
    return biot_savart_monitor(state, ValidData.Monitor.near_axis)


def _thm12(grid: Grid) -> BoundReport:
    trajectory = decaying_trajectory(grid, [-0.25, -0.125, 0.0])
    return thm12_monitor(trajectory, ValidData.Monitor.thm12_point)


class TestRefinementStability:
    @pytest.mark.parametrize(
        "domain, monitor",
        [
            (_cylinder_grid, _oscillation),
            (_near_axis_grid, _biot_savart),
            (_near_axis_grid, _thm12),
        ],
        ids=["oscillation", "biot_savart", "thm12"],
    )
    def test_two_finest_levels_agree(self, domain: Domain, monitor: Monitor) -> None:
        constants = [monitor(domain(n_r, n_z)).implied_constant for n_r, n_z in LEVELS]
        assert all(c > 0.0 for c in constants)
        middle, finest = constants[1:]
        assert abs(finest - middle) < 0.2 * finest
