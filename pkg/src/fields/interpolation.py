"""Bilinear point evaluation of node-sampled fields in the (r, z) half-plane."""

from typing import Union

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from src.fields.scalar_field import ScalarField
from src.geometry import Grid

ArrayLike = Union[np.ndarray, float]


def interpolate_values(
    values: np.ndarray, grid: Grid, r: ArrayLike, z: ArrayLike
) -> np.ndarray:
    """
    Bilinear interpolation of node samples at arbitrary (r, z) points.

    Periodic grids are padded with a copy of the first axial column at
    z_max and query heights are wrapped into [z_min, z_max).

    Args:
        values (np.ndarray): Node samples of shape (n_r, n_z).
        grid (Grid): The grid.
        r (ArrayLike): Radial coordinates of the query points.
        z (ArrayLike): Axial coordinates, broadcast against ``r``.

    Returns:
        np.ndarray: Interpolated values, NaN where a point lies outside the grid.
    """
    r_q, z_q = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(z, dtype=float))
    z_nodes = grid.z
    if grid.z_periodic:
        z_nodes = np.append(z_nodes, grid.z_max)
        values = np.concatenate((values, values[:, :1]), axis=1)
        z_q = grid.z_min + np.mod(z_q - grid.z_min, grid.period)
    interpolator = RegularGridInterpolator(
        (grid.r, z_nodes), values, method="linear", bounds_error=False, fill_value=np.nan
    )
    points = np.stack((r_q.ravel(), z_q.ravel()), axis=-1)
    return interpolator(points).reshape(r_q.shape)


def interpolate(f: ScalarField, r: ArrayLike, z: ArrayLike) -> np.ndarray:
    """Evaluate a field at off-node points; NaN marks points off the grid."""
    return interpolate_values(f.values, f.grid, r, z)
