import numpy as np
import pytest

from src.fields import ScalarField, interpolate, interpolate_values
from src.geometry import Grid


class TestInterpolate:
    def test_bilinear_reproduces_bilinear(self, grid: Grid) -> None:
        f = ScalarField.from_array(grid, 2.0 * grid.rr + 3.0 * grid.zz - grid.rr * grid.zz)
        r = np.array([0.61, 1.3, 2.77, 4.4])
        z = np.array([-4.2, 0.03, 1.11, 3.9])
        assert np.allclose(interpolate(f, r, z), 2.0 * r + 3.0 * z - r * z, atol=1e-12)

    def test_node_values(self, small_grid: Grid) -> None:
        f = ScalarField.from_array(small_grid, np.sin(small_grid.rr) * small_grid.zz)
        values = interpolate(f, small_grid.rr, small_grid.zz)
        assert np.allclose(values, f.values, atol=1e-14)

    @pytest.mark.parametrize("r, z", [(0.25, 0.0), (5.0, 0.0), (1.0, 5.0), (1.0, -5.0)])
    def test_outside_is_nan(self, grid: Grid, r: float, z: float) -> None:
        f = ScalarField.from_array(grid, 1.0)
        assert np.isnan(interpolate(f, r, z))

    def test_periodic_wrap(self, periodic_grid: Grid) -> None:
        values = np.cos(2.0 * np.pi * periodic_grid.zz) * periodic_grid.rr
        z = np.array([0.1, 0.55, 0.97])
        inside = interpolate_values(values, periodic_grid, 1.5, z)
        shifted = interpolate_values(values, periodic_grid, 1.5, z + periodic_grid.period)
        assert np.allclose(inside, shifted, atol=1e-14)
        assert np.all(np.isfinite(interpolate_values(values, periodic_grid, 1.5, 0.99)))

    def test_broadcast_shape(self, grid: Grid) -> None:
        f = ScalarField.from_array(grid, 1.0)
        assert interpolate(f, np.full((2, 3), 1.5), 0.0).shape == (2, 3)
