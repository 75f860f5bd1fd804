import math

import numpy as np
import pytest

from src.diagnostics import spacetime_norm, window_integral, window_samples
from src.errors import RetentionError
from src.evolution import Trajectory
from src.geometry import grid_weights, parabolic, region_mask


class TestWindowSamples:
    def test_samples_on_snapshots(self, trajectory: Trajectory) -> None:
        times, values = window_samples(trajectory, -0.5, 0.0, lambda s: s.t)
        assert times.tolist() == [-0.5, -0.25, 0.0]
        assert values.tolist() == [-0.5, -0.25, 0.0]

    def test_interpolated_start(self, trajectory: Trajectory) -> None:
        times, values = window_samples(trajectory, -0.9, -0.5, lambda s: 2.0 * s.t)
        assert times.tolist() == [-0.9, -0.75, -0.5]
        assert values[0] == pytest.approx(-1.8)

    def test_retention_error(self, trajectory: Trajectory) -> None:
        with pytest.raises(RetentionError) as error:
            window_samples(trajectory, -2.0, 0.0, lambda s: s.t, monitor="lambda")
        assert error.value.monitor == "lambda"
        assert error.value.lookback == 2.0
        assert error.value.available == 1.0


class TestWindowIntegral:
    def test_trapezoid(self) -> None:
        times = np.array([0.0, 0.5, 1.0])
        assert window_integral(times, np.array([0.0, 0.5, 1.0])) == pytest.approx(0.5)

    def test_single_sample(self) -> None:
        assert window_integral(np.array([0.0]), np.array([3.0])) == 0.0


class TestSpacetimeNorm:
    def test_frozen(self, single_snapshot: Trajectory) -> None:
        state = single_snapshot.latest
        region = parabolic(1.0, 4.0, 1.0, R=0.5)
        selected = region_mask(state.grid, region.spatial())
        expected = math.sqrt(
            region.duration * np.sum(selected.weights * state.v_theta.values**2)
        )
        value = spacetime_norm(
            single_snapshot, lambda s: [s.v_theta.values], region, 2.0, frozen=True
        )
        assert value == pytest.approx(expected, rel=1e-12)

    def test_frozen_sup(self, single_snapshot: Trajectory) -> None:
        state = single_snapshot.latest
        region = parabolic(1.0, 4.0, 1.0)
        value = spacetime_norm(
            single_snapshot, lambda s: [s.gamma.values], region, math.inf, frozen=True
        )
        mask = region_mask(state.grid, region.spatial()).mask
        assert value == np.max(np.abs(state.gamma.values[mask]))

    def test_constant_history(self, trajectory: Trajectory) -> None:
        grid = trajectory.latest.grid
        region = parabolic(1.0, 4.0, 1.0, measure="area")
        value = spacetime_norm(trajectory, lambda s: [np.ones(grid.shape)], region)
        assert value == pytest.approx(math.sqrt(24.0), rel=1e-12)
        assert grid_weights(grid, "area").sum() == pytest.approx(4.0 * 9.0)
