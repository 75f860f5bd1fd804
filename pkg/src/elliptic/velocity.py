"""
Meridional velocity from the angular stream function and the assembly of
complete flow states.
"""

from typing import Optional

import numpy as np

from src.fields import FlowState, ScalarField, same_grid
from src.fields.operators import d_r, d_z
from src.elliptic.stream_solver import EllipticSolveReport, StreamSolver


def velocity_from_stream(stream: ScalarField) -> tuple[ScalarField, ScalarField]:
    """
    Meridional velocity v_r = -D_z L_theta, v_z = (1/r) D_r(r L_theta).

    Args:
        stream (ScalarField): Angular stream function.

    Returns:
        tuple[ScalarField, ScalarField]: (v_r, v_z). Discretely solenoidal:
        ``divergence_cyl`` of the pair is zero to round-off.
    """
    grid = stream.grid
    rr = grid.rr
    v_r = -d_z(stream.values, grid)
    v_z = d_r(rr * stream.values, grid) / rr
    return (
        ScalarField.from_array(grid, v_r, "v_r"),
        ScalarField.from_array(grid, v_z, "v_z"),
    )


def stream_gradient_identity(
    stream: ScalarField, v_r: ScalarField, v_z: ScalarField
) -> float:
    """
    Largest interior discrepancy of |grad(r L_theta)|^2 = r^2 (v_r^2 + v_z^2).

    The gradient is the two dimensional (D_r, D_z) of r L_theta.

    Args:
        stream (ScalarField): Angular stream function.
        v_r (ScalarField): Radial velocity.
        v_z (ScalarField): Axial velocity.

    Returns:
        float: Max over interior nodes of the absolute discrepancy.
    """
    grid = same_grid(stream, v_r, v_z)
    rr = grid.rr
    moment = rr * stream.values
    gradient2 = d_r(moment, grid) ** 2 + d_z(moment, grid) ** 2
    discrepancy = np.abs(gradient2 - rr**2 * (v_r.values**2 + v_z.values**2))
    interior = ~grid.boundary_mask()
    return float(np.max(discrepancy[interior]))


def derive(
    t: float,
    gamma: ScalarField,
    omega: ScalarField,
    stream: ScalarField,
    derived_fresh: bool = True,
) -> FlowState:
    """
    Fill the derived fields of a state from (Gamma, Omega, L_theta).

    Args:
        t (float): Time.
        gamma (ScalarField): Swirl moment.
        omega (ScalarField): Reduced vorticity.
        stream (ScalarField): Stream function belonging to r * Omega.
        derived_fresh (bool): Whether ``stream`` was solved from this Omega.

    Returns:
        FlowState: State with v_theta = Gamma / r, omega_theta = r Omega and
        the meridional velocity of ``stream``.
    """
    grid = same_grid(gamma, omega, stream)
    v_r, v_z = velocity_from_stream(stream)
    return FlowState(
        t=t,
        gamma=gamma.renamed("gamma"),
        omega=omega.renamed("omega"),
        stream=stream.renamed("stream"),
        v_r=v_r,
        v_theta=ScalarField.from_array(grid, gamma.values / grid.rr, "v_theta"),
        v_z=v_z,
        omega_theta=ScalarField.from_array(grid, grid.rr * omega.values, "omega_theta"),
        derived_fresh=derived_fresh,
    )


def close_state(
    t: float,
    gamma: ScalarField,
    omega: ScalarField,
    solver: StreamSolver,
    stream_bc: Optional[ScalarField] = None,
) -> tuple[FlowState, EllipticSolveReport]:
    """Solve L_theta from r * Omega and derive the full state."""
    grid = same_grid(gamma, omega)
    omega_theta = ScalarField.from_array(grid, grid.rr * omega.values, "omega_theta")
    stream, report = solver.solve(omega_theta, stream_bc)
    return derive(t, gamma, omega, stream), report
