import pytest

from src.geometry import Grid, make_grid
from src.utils.data import ValidData


@pytest.fixture
def grid() -> Grid:
    return make_grid(
        ValidData.Grid.r_min,
        ValidData.Grid.r_max,
        ValidData.Grid.z_min,
        ValidData.Grid.z_max,
        ValidData.Grid.n_r,
        ValidData.Grid.n_z,
    )


@pytest.fixture
def small_grid() -> Grid:
    return make_grid(
        ValidData.SmallGrid.r_min,
        ValidData.SmallGrid.r_max,
        ValidData.SmallGrid.z_min,
        ValidData.SmallGrid.z_max,
        ValidData.SmallGrid.n_r,
        ValidData.SmallGrid.n_z,
    )


@pytest.fixture
def near_axis_grid() -> Grid:
    return make_grid(
        ValidData.NearAxisGrid.r_min,
        ValidData.NearAxisGrid.r_max,
        ValidData.NearAxisGrid.z_min,
        ValidData.NearAxisGrid.z_max,
        ValidData.NearAxisGrid.n_r,
        ValidData.NearAxisGrid.n_z,
    )


@pytest.fixture
def periodic_grid() -> Grid:
    return make_grid(1.0, 2.0, 0.0, 1.0, 17, 16, z_periodic=True)
