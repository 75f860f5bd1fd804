import numpy as np
import pytest

from src.elliptic import (
    StreamSolver,
    close_state,
    derive,
    stream_gradient_identity,
    velocity_from_stream,
)
from src.fields import FlowState, ScalarField
from src.geometry import Grid


class TestVelocityFromStream:
    def test_uniform_axial_flow(self, grid: Grid) -> None:
        stream = ScalarField.from_array(grid, 0.5 * grid.rr)
        v_r, v_z = velocity_from_stream(stream)
        assert np.allclose(v_r.values, 0.0, atol=1e-14)
        assert np.allclose(v_z.values, 1.0, atol=1e-12)

    def test_gradient_identity(self, swirl_state: FlowState) -> None:
        residual = stream_gradient_identity(
            swirl_state.stream, swirl_state.v_r, swirl_state.v_z
        )
        assert residual <= 1e-10

    def test_gradient_identity_detects_mismatch(self, swirl_state: FlowState) -> None:
        residual = stream_gradient_identity(
            swirl_state.stream, swirl_state.v_r + 1.0, swirl_state.v_z
        )
        assert residual > 0.1


class TestDerive:
    def test_derive(self, grid: Grid) -> None:
        gamma = ScalarField.from_array(grid, grid.rr**2)
        omega = ScalarField.from_array(grid, 2.0)
        stream = ScalarField.zeros(grid)
        state = derive(0.5, gamma, omega, stream)
        assert state.t == 0.5
        assert np.allclose(state.v_theta.values, grid.rr)
        assert np.allclose(state.omega_theta.values, 2.0 * grid.rr)
        assert state.derived_fresh

    def test_derive_stale(self, grid: Grid) -> None:
        zero = ScalarField.zeros(grid)
        assert not derive(0.0, zero, zero, zero, derived_fresh=False).derived_fresh


class TestCloseState:
    def test_close_state(self, swirl_state: FlowState) -> None:
        solver = StreamSolver(swirl_state.grid)
        state, report = close_state(
            1.0, swirl_state.gamma, swirl_state.omega, solver, swirl_state.stream
        )
        assert state.t == 1.0
        assert report.residual_norm <= report.tolerance
        assert state.gamma.values == pytest.approx(swirl_state.gamma.values)
        assert np.allclose(
            state.omega_theta.values, swirl_state.grid.rr * swirl_state.omega.values
        )
