import math

import pytest

from src.errors import EmptyRegionError, RegionError
from src.geometry import (
    Grid,
    annular_cylinder,
    ball,
    is_clipped,
    parabolic,
    region_mask,
    scale_region,
    sigma_region,
)


class TestRegion:
    def test_annular_cylinder_bounds(self) -> None:
        region = annular_cylinder(1.0, 4.0)
        assert region.r_bounds == (1.0, 4.0)
        assert region.z_bounds == (-4.0, 4.0)
        assert region.duration == 0.0

    def test_parabolic_time_window(self) -> None:
        region = parabolic(1.0, 4.0, 1.0, R=2.0)
        assert region.duration == 4.0
        assert region.time_window(1.0) == (-3.0, 1.0)
        assert region.spatial().kind == "annular_cylinder"
        assert region.spatial().R == 2.0

    @pytest.mark.parametrize("A, B", [(4.0, 1.0), (0.0, 1.0), (1.0, 1.0)])
    def test_invalid_cylinder(self, A: float, B: float) -> None:
        with pytest.raises(ValueError):
            annular_cylinder(A, B)

    def test_invalid_ball(self) -> None:
        with pytest.raises(ValueError):
            ball((1.0, 0.0, 0.0), 0.0)


class TestScaleRegion:
    def test_scale_region(self) -> None:
        scaled = scale_region(annular_cylinder(1.0, 4.0), 2.0)
        assert scaled.r_bounds == (2.0, 8.0)
        assert scaled.z_bounds == (-8.0, 8.0)

    def test_scale_region_window(self) -> None:
        scaled = scale_region(parabolic(1.0, 4.0, 1.0), 2.0)
        assert scaled.duration == 4.0

    @pytest.mark.parametrize("k", [0.25, 0.5, 2.0, 8.0])
    def test_scale_region_round_trip(self, k: float) -> None:
        region = parabolic(1.0, 4.0, 0.75, R=1.5, z_center=0.5)
        assert scale_region(scale_region(region, k), 1.0 / k) == region

    def test_scale_ball(self) -> None:
        scaled = scale_region(ball((1.0, 0.0, 2.0), 0.5), 2.0)
        assert scaled.center == (2.0, 0.0, 4.0)
        assert scaled.radius == 1.0

    def test_scale_region_invalid(self) -> None:
        with pytest.raises(RegionError):
            scale_region(annular_cylinder(1.0, 4.0), 0.0)


class TestSigmaRegion:
    def test_sigma_one(self) -> None:
        region = sigma_region(1.0)
        assert region.r_bounds == (1.0, 4.0)
        assert region.measure == "area"

    def test_sigma_nine_eighths(self) -> None:
        assert sigma_region(9.0 / 8.0).r_bounds == (0.5, 4.5)

    @pytest.mark.parametrize("sigma", [0.5, 0.625, 1.25, 2.0])
    def test_sigma_out_of_range(self, sigma: float) -> None:
        with pytest.raises(RegionError):
            sigma_region(sigma)


class TestRegionMask:
    def test_area_measure(self, grid: Grid) -> None:
        selected = region_mask(grid, annular_cylinder(1.0, 4.0, measure="area"))
        assert selected.measure == pytest.approx(3.0 * 8.0, rel=1e-12)
        assert not selected.clipped

    def test_volume_measure(self, grid: Grid) -> None:
        selected = region_mask(grid, annular_cylinder(1.0, 4.0))
        assert selected.measure == pytest.approx(math.pi * (16.0 - 1.0) * 8.0, rel=1e-12)

    def test_mask_selects_faces(self, grid: Grid) -> None:
        selected = region_mask(grid, annular_cylinder(1.0, 4.0))
        r_inside = grid.rr[selected.mask]
        assert r_inside.min() == 1.0
        assert r_inside.max() == 4.0

    def test_empty_region(self, grid: Grid) -> None:
        with pytest.raises(EmptyRegionError):
            region_mask(grid, annular_cylinder(10.0, 20.0))

    def test_clipped(self, grid: Grid) -> None:
        assert not is_clipped(grid, annular_cylinder(1.0, 4.0))
        assert is_clipped(grid, annular_cylinder(1.0, 8.0))
        assert region_mask(grid, annular_cylinder(1.0, 8.0)).clipped

    def test_ball_disk(self, grid: Grid) -> None:
        selected = region_mask(grid, ball((2.0, 0.0, 0.0), 1.0, "area"))
        assert selected.measure == pytest.approx(math.pi, rel=0.1)
        assert not selected.clipped

    def test_periodic_wrap(self, periodic_grid: Grid) -> None:
        selected = region_mask(
            periodic_grid, annular_cylinder(1.0, 2.0, z_center=0.0, measure="area")
        )
        assert selected.mask.all()
        assert not selected.clipped
