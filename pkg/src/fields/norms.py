"""
Discrete Lebesgue norms over regions and the kinetic energy.
"""

import math
from typing import Sequence

import numpy as np

from src.fields.flow_state import FlowState
from src.fields.scalar_field import ScalarField, same_grid
from src.geometry import Region, grid_weights, region_mask


def _lp(magnitude: np.ndarray, weights: np.ndarray, mask: np.ndarray, p: float) -> float:
    if math.isinf(p):
        return float(np.max(magnitude[mask]))
    return float(np.sum(weights * magnitude**p) ** (1.0 / p))


def norm(f: ScalarField, region: Region, p: float = 2.0) -> float:
    """
    L^p norm of a field over the spatial part of a region.

    Args:
        f (ScalarField): The field.
        region (Region): Cylinder, ball or the section of a parabolic region,
            integrated with the region's measure.
        p (float): Exponent in [1, inf].

    Returns:
        float: (sum of weights * |f|^p)^(1/p), or the max of |f| over the
        region's nodes when p is infinite.

    Raises:
        EmptyRegionError: If the region holds no node.
    """
    selected = region_mask(f.grid, region)
    return _lp(np.abs(f.values), selected.weights, selected.mask, p)


def vector_norm(components: Sequence[ScalarField], region: Region, p: float = 2.0) -> float:
    """L^p norm of the pointwise Euclidean magnitude of several components."""
    grid = same_grid(*components)
    selected = region_mask(grid, region)
    magnitude = np.sqrt(sum(c.values**2 for c in components))
    return _lp(magnitude, selected.weights, selected.mask, p)


def kinetic_energy(state: FlowState) -> float:
    """
    Kinetic energy 1/2 of the volume integral of |v|^2 over the whole grid.

    Args:
        state (FlowState): The flow.

    Returns:
        float: The trapezoid-rule energy with volume weights 2 pi r dr dz.
    """
    weights = grid_weights(state.grid, "volume")
    return 0.5 * float(np.sum(weights * state.speed() ** 2))
