"""
Cylindrical differential operators for axisymmetric fields.

With no dependence on the rotation angle the gradient is (d/dr, 0, d/dz)
and the Laplacian reduces to d2/dr2 + (1/r) d/dr + d2/dz2.
"""

import numpy as np

from src.fields.scalar_field import ScalarField, same_grid
from src.fields.stencils import first_derivative, second_derivative
from src.geometry import Grid


def d_r(values: np.ndarray, grid: Grid) -> np.ndarray:
    return first_derivative(values, grid.h_r, axis=0, periodic=False)


def d_z(values: np.ndarray, grid: Grid) -> np.ndarray:
    return first_derivative(values, grid.h_z, axis=1, periodic=grid.z_periodic)


def d_rr(values: np.ndarray, grid: Grid) -> np.ndarray:
    return second_derivative(values, grid.h_r, axis=0, periodic=False)


def d_zz(values: np.ndarray, grid: Grid) -> np.ndarray:
    return second_derivative(values, grid.h_z, axis=1, periodic=grid.z_periodic)


def laplacian(values: np.ndarray, grid: Grid) -> np.ndarray:
    return d_rr(values, grid) + d_r(values, grid) / grid.rr + d_zz(values, grid)


def ddr(f: ScalarField) -> ScalarField:
    """Radial derivative: centered inside, one-sided second order at r_min and r_max."""
    return ScalarField.from_array(f.grid, d_r(f.values, f.grid), f"d_r {f.name}")


def ddz(f: ScalarField) -> ScalarField:
    """Axial derivative, wrapping around on periodic grids."""
    return ScalarField.from_array(f.grid, d_z(f.values, f.grid), f"d_z {f.name}")


def d2r(f: ScalarField) -> ScalarField:
    return ScalarField.from_array(f.grid, d_rr(f.values, f.grid), f"d_rr {f.name}")


def d2z(f: ScalarField) -> ScalarField:
    return ScalarField.from_array(f.grid, d_zz(f.values, f.grid), f"d_zz {f.name}")


def cyl_laplacian(f: ScalarField) -> ScalarField:
    """
    Axisymmetric Laplacian D_rr f + (1/r) D_r f + D_zz f.

    Args:
        f (ScalarField): The field.

    Returns:
        ScalarField: The Laplacian; exact on quadratics, e.g. r^2 gives 4.
    """
    return ScalarField.from_array(f.grid, laplacian(f.values, f.grid), f"lap {f.name}")


def divergence_cyl(v_r: ScalarField, v_z: ScalarField) -> ScalarField:
    """
    Divergence (1/r) D_r(r v_r) + D_z v_z of a meridional vector field.

    Applied to a velocity built by ``velocity_from_stream`` this vanishes to
    round-off: the r weights do not depend on z, so D_r and D_z commute.

    Args:
        v_r (ScalarField): Radial component.
        v_z (ScalarField): Axial component.

    Returns:
        ScalarField: The divergence.

    Raises:
        FieldError: If the components live on different grids.
    """
    grid = same_grid(v_r, v_z)
    rr = grid.rr
    values = d_r(rr * v_r.values, grid) / rr + d_z(v_z.values, grid)
    return ScalarField.from_array(grid, values, "div b")


def curl_theta(v_r: ScalarField, v_z: ScalarField) -> ScalarField:
    """Angular vorticity omega_theta = D_z v_r - D_r v_z."""
    grid = same_grid(v_r, v_z)
    values = d_z(v_r.values, grid) - d_r(v_z.values, grid)
    return ScalarField.from_array(grid, values, "omega_theta")


def curl_r(v_theta: ScalarField) -> ScalarField:
    """Radial vorticity omega_r = -D_z v_theta (output only, never evolved)."""
    return ScalarField.from_array(
        v_theta.grid, -d_z(v_theta.values, v_theta.grid), "omega_r"
    )


def curl_z(v_theta: ScalarField) -> ScalarField:
    """Axial vorticity omega_z = D_r v_theta + v_theta / r (output only)."""
    grid = v_theta.grid
    values = d_r(v_theta.values, grid) + v_theta.values / grid.rr
    return ScalarField.from_array(grid, values, "omega_z")
