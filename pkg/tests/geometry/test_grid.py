import numpy as np
import pytest

from src.errors import GridError
from src.geometry import Grid, make_grid


class TestMakeGrid:
    def test_make_grid_successful(self, grid: Grid) -> None:
        assert grid.shape == (33, 73)
        assert grid.h_r == 0.125
        assert grid.h_z == 0.125
        assert grid.r[0] == 0.5
        assert grid.r[-1] == 4.5
        assert grid.rr.shape == grid.shape
        assert not grid.r.flags.writeable

    @pytest.mark.parametrize(
        "r_min, r_max, z_min, z_max, n_r, n_z, message",
        [
            (0.0, 1.0, 0.0, 1.0, 16, 16, "axis excluded"),
            (-1.0, 1.0, 0.0, 1.0, 16, 16, "axis excluded"),
            (1.0, 1.0, 0.0, 1.0, 16, 16, "non-positive radial extent"),
            (1.0, 2.0, 1.0, 0.0, 16, 16, "non-positive axial extent"),
            (1.0, 2.0, 0.0, 1.0, 4, 16, "at least 8"),
            (1.0, 2.0, 0.0, 1.0, 16, -4, "at least 8"),
            (1.0, float("inf"), 0.0, 1.0, 16, 16, "finite"),
        ],
    )
    def test_make_grid_invalid(
        self,
        r_min: float,
        r_max: float,
        z_min: float,
        z_max: float,
        n_r: int,
        n_z: int,
        message: str,
    ) -> None:
        with pytest.raises(GridError, match=message):
            make_grid(r_min, r_max, z_min, z_max, n_r, n_z)

    def test_periodic_spacing_excludes_end_point(self, periodic_grid: Grid) -> None:
        assert periodic_grid.h_z == 1.0 / 16
        assert periodic_grid.z[-1] < periodic_grid.z_max


class TestBoundaryMask:
    def test_boundary_mask(self, small_grid: Grid) -> None:
        mask = small_grid.boundary_mask()
        assert mask[0].all() and mask[-1].all()
        assert mask[:, 0].all() and mask[:, -1].all()
        assert not mask[1:-1, 1:-1].any()

    def test_boundary_mask_periodic(self, periodic_grid: Grid) -> None:
        mask = periodic_grid.boundary_mask()
        assert mask[0].all() and mask[-1].all()
        assert not mask[1:-1].any()


class TestScaled:
    @pytest.mark.parametrize("k", [0.5, 2.0, 4.0])
    def test_scaled_nodes_are_exact(self, grid: Grid, k: float) -> None:
        scaled = grid.scaled(k)
        assert np.array_equal(scaled.r, grid.r / k)
        assert np.array_equal(scaled.z, grid.z / k)
        assert scaled.shape == grid.shape
