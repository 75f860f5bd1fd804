"""
Second-order finite difference stencils on raw node arrays.

Arrays are laid out (n_r, n_z): axis 0 is radial, axis 1 axial. Non-periodic
ends use one-sided second-order stencils, periodic axes wrap with ``np.roll``.
"""

import numpy as np


def first_derivative(values: np.ndarray, h: float, axis: int, periodic: bool) -> np.ndarray:
    """
    Centered first derivative along one axis.

    Args:
        values (np.ndarray): Node samples.
        h (float): Node spacing along ``axis``.
        axis (int): 0 for r, 1 for z.
        periodic (bool): Wrap around instead of one-sided end stencils.

    Returns:
        np.ndarray: The derivative, same shape as ``values``.
    """
    if periodic:
        return (np.roll(values, -1, axis=axis) - np.roll(values, 1, axis=axis)) / (
            2.0 * h
        )
    a = np.moveaxis(values, axis, 0)
    out = np.empty_like(a, dtype=float)
    out[1:-1] = (a[2:] - a[:-2]) / (2.0 * h)
    out[0] = (-3.0 * a[0] + 4.0 * a[1] - a[2]) / (2.0 * h)
    out[-1] = (3.0 * a[-1] - 4.0 * a[-2] + a[-3]) / (2.0 * h)
    return np.moveaxis(out, 0, axis)


def second_derivative(
    values: np.ndarray, h: float, axis: int, periodic: bool
) -> np.ndarray:
    """Centered second derivative; four-point one-sided stencils at the ends."""
    if periodic:
        return (
            np.roll(values, -1, axis=axis) - 2.0 * values + np.roll(values, 1, axis=axis)
        ) / (h * h)
    a = np.moveaxis(values, axis, 0)
    out = np.empty_like(a, dtype=float)
    out[1:-1] = (a[2:] - 2.0 * a[1:-1] + a[:-2]) / (h * h)
    out[0] = (2.0 * a[0] - 5.0 * a[1] + 4.0 * a[2] - a[3]) / (h * h)
    out[-1] = (2.0 * a[-1] - 5.0 * a[-2] + 4.0 * a[-3] - a[-4]) / (h * h)
    return np.moveaxis(out, 0, axis)
