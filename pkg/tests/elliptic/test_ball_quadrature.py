import math

import numpy as np
import pytest

from src.elliptic import BallQuadrature
from src.geometry import Grid


class TestBallQuadrature:
    @pytest.mark.parametrize("radius", [0.1, 0.5, 2.0])
    def test_volume(self, radius: float) -> None:
        samples = BallQuadrature().samples((1.0, 0.0, 0.0), radius)
        assert samples.volume == pytest.approx(4.0 * math.pi * radius**3 / 3.0, rel=1e-12)

    def test_rotation_invariance(self) -> None:
        quadrature = BallQuadrature()
        first = quadrature.samples((1.0, 0.0, 0.5), 0.3)
        rotated = quadrature.samples((0.0, 1.0, 0.5), 0.3)
        assert np.array_equal(first.r, rotated.r)
        assert np.array_equal(first.z, rotated.z)

    def test_constant_norm(self, grid: Grid) -> None:
        ones = np.ones(grid.shape)
        value, clipped = BallQuadrature().lp_norm([ones], grid, (2.0, 0.0, 0.0), 0.5, 1.0)
        assert value == pytest.approx(4.0 * math.pi * 0.125 / 3.0, rel=1e-12)
        assert not clipped

    def test_quadratic_moment(self, grid: Grid) -> None:
        radius = 0.5
        value, _ = BallQuadrature().lp_norm([grid.zz], grid, (2.0, 0.0, 0.0), radius)
        assert value == pytest.approx(
            math.sqrt(4.0 * math.pi * radius**5 / 15.0), rel=1e-10
        )

    def test_clipped(self, grid: Grid) -> None:
        ones = np.ones(grid.shape)
        value, clipped = BallQuadrature().lp_norm([ones], grid, (0.6, 0.0, 0.0), 0.5)
        assert clipped
        assert 0.0 < value < math.sqrt(4.0 * math.pi * 0.125 / 3.0)

    def test_sup(self, grid: Grid) -> None:
        value, clipped = BallQuadrature().sup(
            [grid.rr, np.zeros(grid.shape)], grid, (2.0, 0.0, 1.0), 0.25
        )
        assert not clipped
        assert 2.0 <= value <= 2.25

    def test_sup_center_off_grid(self, grid: Grid) -> None:
        _, clipped = BallQuadrature().sup([np.ones(grid.shape)], grid, (0.2, 0.0, 0.0), 0.1)
        assert clipped
