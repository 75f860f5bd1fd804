"""
Product quadrature over three dimensional balls for axisymmetric fields.

A ball B(x, a) is sampled in ball coordinates (rho, phi, theta): Gauss-Legendre
in rho with weight rho^2, Gauss-Legendre in cos(phi) and the uniform rule in
theta. The axisymmetric integrand is looked up at the cylindrical radius and
height of every sample by bilinear interpolation.
"""

import math
from functools import lru_cache
from typing import Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from src.config import Config
from src.fields import interpolate_values
from src.geometry import Grid
from src.models import BaseModel

Point = tuple[float, float, float]


@lru_cache(maxsize=16)
def _unit_ball(
    radial: int, polar: int, azimuthal: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    x, w = leggauss(radial)
    rho = 0.5 * (x + 1.0)
    w_rho = 0.5 * w * rho**2
    mu, w_mu = leggauss(polar)
    theta = 2.0 * np.pi * (np.arange(azimuthal) + 0.5) / azimuthal
    w_theta = 2.0 * np.pi / azimuthal
    R, M, T = np.meshgrid(rho, mu, theta, indexing="ij")
    S = np.sqrt(1.0 - M**2)
    offsets_x = (R * S * np.cos(T)).ravel()
    offsets_y = (R * S * np.sin(T)).ravel()
    offsets_z = (R * M).ravel()
    weights = (w_rho[:, None, None] * w_mu[None, :, None] * w_theta).repeat(
        azimuthal, axis=2
    ).ravel()
    for array in (offsets_x, offsets_y, offsets_z, weights):
        array.setflags(write=False)
    return offsets_x, offsets_y, offsets_z, weights


class BallSamples(BaseModel):
    """
    Quadrature nodes of one ball in cylindrical coordinates.

    Attributes:
        r: Cylindrical radius of each node.
        z: Height of each node.
        weights: Volume weight of each node, summing to 4 pi a^3 / 3.
    """

    r: np.ndarray
    z: np.ndarray
    weights: np.ndarray

    @property
    def volume(self) -> float:
        return float(self.weights.sum())

    def evaluate(self, values: np.ndarray, grid: Grid) -> np.ndarray:
        """Interpolated samples of a node array, NaN at nodes off the grid."""
        return interpolate_values(values, grid, self.r, self.z)


class BallQuadrature(BaseModel):
    """
    Resolution of the ball rule.

    Attributes:
        radial: Gauss nodes in rho.
        polar: Gauss nodes in cos(phi).
        azimuthal: Uniform nodes in theta.
    """

    radial: int = Config.QUADRATURE.RADIAL
    polar: int = Config.QUADRATURE.POLAR
    azimuthal: int = Config.QUADRATURE.AZIMUTHAL

    def samples(self, center: Point, radius: float) -> BallSamples:
        """
        Nodes of the ball B(center, radius).

        Nodes are generated in the frame where the center sits at (r_c, 0, z_c),
        so every rotation of the center about the z-axis gives the same nodes.
        """
        r_c = math.hypot(center[0], center[1])
        dx, dy, dz, w = _unit_ball(self.radial, self.polar, self.azimuthal)
        r = np.sqrt((r_c + radius * dx) ** 2 + (radius * dy) ** 2)
        z = center[2] + radius * dz
        return BallSamples(r=r, z=z, weights=w * radius**3)

    def lp_norm(
        self,
        components: Sequence[np.ndarray],
        grid: Grid,
        center: Point,
        radius: float,
        p: float = 2.0,
    ) -> tuple[float, bool]:
        """
        L^p norm over a ball of the Euclidean magnitude of node arrays.

        Args:
            components (Sequence[np.ndarray]): Node arrays of the components.
            grid (Grid): Their grid.
            center (Point): Ball center (x1, x2, x3).
            radius (float): Ball radius.
            p (float): Exponent in [1, inf].

        Returns:
            tuple[float, bool]: The norm and whether the ball left the grid;
            samples off the grid contribute nothing, so a clipped norm is a
            lower bound.
        """
        nodes = self.samples(center, radius)
        magnitude2 = sum(nodes.evaluate(c, grid) ** 2 for c in components)
        clipped = bool(np.isnan(magnitude2).any())
        magnitude = np.sqrt(np.nan_to_num(magnitude2, nan=0.0))
        if math.isinf(p):
            return float(np.max(magnitude)), clipped
        return float(np.sum(nodes.weights * magnitude**p) ** (1.0 / p)), clipped

    def sup(
        self, components: Sequence[np.ndarray], grid: Grid, center: Point, radius: float
    ) -> tuple[float, bool]:
        """Largest sampled magnitude over the ball, the center included."""
        value, clipped = self.lp_norm(components, grid, center, radius, math.inf)
        r_c = math.hypot(center[0], center[1])
        at_center = sum(
            interpolate_values(c, grid, r_c, center[2]) ** 2 for c in components
        )
        if np.isnan(at_center):
            return value, True
        return max(value, float(np.sqrt(at_center))), clipped
