"""
Time derivatives of the prognostic pair at unit viscosity.

    d_t Gamma = Delta Gamma - b.grad Gamma - (2/r) d_r Gamma
    d_t Omega = Delta Omega - b.grad Omega + (2/r) d_r Omega + (1/r^4) d_z Gamma^2

The Omega source (1/r^4) d_z Gamma^2 equals (2 v_theta / r^2) d_z v_theta
because r does not depend on z.
"""

import numpy as np

from src.errors import FieldError
from src.fields import FlowState, ScalarField
from src.fields.operators import d_r, d_z, laplacian
from src.geometry import Grid


def gamma_tendency(
    gamma: np.ndarray, v_r: np.ndarray, v_z: np.ndarray, grid: Grid
) -> np.ndarray:
    g_r = d_r(gamma, grid)
    return (
        laplacian(gamma, grid) - v_r * g_r - v_z * d_z(gamma, grid) - 2.0 * g_r / grid.rr
    )


def omega_tendency(
    omega: np.ndarray,
    gamma: np.ndarray,
    v_r: np.ndarray,
    v_z: np.ndarray,
    grid: Grid,
) -> np.ndarray:
    rr = grid.rr
    o_r = d_r(omega, grid)
    source = d_z(gamma * gamma, grid) / rr**4
    return (
        laplacian(omega, grid)
        - v_r * o_r
        - v_z * d_z(omega, grid)
        + 2.0 * o_r / rr
        + source
    )


def _require_fresh(state: FlowState) -> None:
    if not state.derived_fresh:
        raise FieldError(f"state at t={state.t!r} has stale derived fields")


def rhs_gamma(state: FlowState) -> ScalarField:
    """
    d_t Gamma for a state with fresh derived fields.

    Args:
        state (FlowState): The flow.

    Returns:
        ScalarField: Delta Gamma - v_r D_r Gamma - v_z D_z Gamma - (2/r) D_r Gamma.

    Raises:
        FieldError: If the derived fields are stale.
    """
    _require_fresh(state)
    values = gamma_tendency(
        state.gamma.values, state.v_r.values, state.v_z.values, state.grid
    )
    return ScalarField.from_array(state.grid, values, "rhs_gamma")


def rhs_omega(state: FlowState) -> ScalarField:
    """d_t Omega for a state with fresh derived fields."""
    _require_fresh(state)
    values = omega_tendency(
        state.omega.values,
        state.gamma.values,
        state.v_r.values,
        state.v_z.values,
        state.grid,
    )
    return ScalarField.from_array(state.grid, values, "rhs_omega")
