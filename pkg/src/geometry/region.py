"""
Measurement regions: hollow cylinders C_{AR,BR}, parabolic regions
P_{AR,BR,SR} = C_{AR,BR} x (-S^2 R^2, 0], and balls.

Every region carries the measure it is integrated with: ``area`` is the
two dimensional element dr dz of the meridional half-plane, ``volume`` the
three dimensional element r dr dz dtheta.
"""

import math
from typing import Literal, Optional

import numpy as np
from pydantic import model_validator

from src.errors import EmptyRegionError, RegionError
from src.geometry.grid import Grid
from src.models import BaseModel

RegionKind = Literal["annular_cylinder", "ball", "parabolic"]
Measure = Literal["area", "volume"]

# Relative slack on node membership, so nodes lying on a region face count.
_MEMBERSHIP_SLACK = 1.0e-9


class Region(BaseModel):
    """
    A spatial or space-time region.

    Attributes:
        kind: ``annular_cylinder``, ``ball`` or ``parabolic``.
        A: Inner radius factor (cylinders).
        B: Outer radius and half-height factor (cylinders).
        R: Length scale multiplying A and B.
        S: Time-window factor, the window is (-S^2 R^2, 0] (parabolic only).
        z_center: Axial center of a cylinder.
        center: Cartesian center (x1, x2, x3) of a ball.
        radius: Ball radius.
        measure: ``area`` or ``volume``.
    """

    kind: RegionKind
    A: float = 1.0
    B: float = 4.0
    R: float = 1.0
    S: float = 1.0
    z_center: float = 0.0
    center: tuple[float, float, float] = (0.0, 0.0, 0.0)
    radius: float = 0.0
    measure: Measure = "volume"

    @model_validator(mode="after")
    def check_parameters(self) -> "Region":
        if self.kind == "ball":
            if not self.radius > 0.0:
                raise ValueError("ball radius must be > 0")
            return self
        if not 0.0 < self.A < self.B:
            raise ValueError("cylinder factors must satisfy 0 < A < B")
        if not self.R > 0.0:
            raise ValueError("cylinder scale R must be > 0")
        if self.kind == "parabolic" and not self.S > 0.0:
            raise ValueError("parabolic time factor S must be > 0")
        return self

    @property
    def r_bounds(self) -> tuple[float, float]:
        """Radial extent of the region's meridional footprint."""
        if self.kind == "ball":
            r_c = self.center_radius
            return (r_c - self.radius, r_c + self.radius)
        return (self.A * self.R, self.B * self.R)

    @property
    def z_bounds(self) -> tuple[float, float]:
        """Axial extent of the region's meridional footprint."""
        if self.kind == "ball":
            z_c = self.center[2]
            return (z_c - self.radius, z_c + self.radius)
        half = self.B * self.R
        return (self.z_center - half, self.z_center + half)

    @property
    def center_radius(self) -> float:
        """Distance of a ball center from the z-axis."""
        return math.hypot(self.center[0], self.center[1])

    @property
    def duration(self) -> float:
        """Length S^2 R^2 of the time window, zero for spatial regions."""
        if self.kind != "parabolic":
            return 0.0
        return (self.S * self.R) ** 2

    def time_window(self, t: float) -> tuple[float, float]:
        """The window [t - S^2 R^2, t] ending at time t."""
        return (t - self.duration, t)

    def spatial(self) -> "Region":
        """The spatial section of a parabolic region."""
        if self.kind != "parabolic":
            return self
        return Region.model_validate_partial(self, {"kind": "annular_cylinder"})

    def with_measure(self, measure: Measure) -> "Region":
        return Region.model_validate_partial(self, {"measure": measure})


def annular_cylinder(
    A: float,
    B: float,
    R: float = 1.0,
    z_center: float = 0.0,
    measure: Measure = "volume",
) -> Region:
    """The hollow cylinder C_{AR,BR} = {AR <= r <= BR, |z - z_center| <= BR}."""
    return Region(
        kind="annular_cylinder", A=A, B=B, R=R, z_center=z_center, measure=measure
    )


def parabolic(
    A: float,
    B: float,
    S: float,
    R: float = 1.0,
    z_center: float = 0.0,
    measure: Measure = "volume",
) -> Region:
    """The parabolic region P_{AR,BR,SR} = C_{AR,BR} x (-S^2 R^2, 0]."""
    return Region(
        kind="parabolic", A=A, B=B, S=S, R=R, z_center=z_center, measure=measure
    )


def ball(
    center: tuple[float, float, float], radius: float, measure: Measure = "volume"
) -> Region:
    return Region(kind="ball", center=center, radius=radius, measure=measure)


def sigma_region(
    sigma: float, R: float = 1.0, z_center: float = 0.0, measure: Measure = "area"
) -> Region:
    """
    The cylinder C(sigma) = {5 - 4 sigma < r < 4 sigma, |z| < 4 sigma}, scaled by R.

    Args:
        sigma (float): Shape parameter, 5/8 < sigma < 5/4.
        R (float): Length scale.
        z_center (float): Axial center.
        measure (Measure): Defaults to the two dimensional element.

    Returns:
        Region: C_{(5 - 4 sigma) R, 4 sigma R}.
    """
    if not 0.625 < sigma < 1.25:
        raise RegionError(f"sigma={sigma} outside (5/8, 5/4)")
    return annular_cylinder(5.0 - 4.0 * sigma, 4.0 * sigma, R, z_center, measure)


def scale_region(region: Region, k: float) -> Region:
    """
    Dilate a region by k.

    Lengths are multiplied by k, so a parabolic time window grows by k^2.

    Args:
        region (Region): The region to scale.
        k (float): Dilation factor, > 0.

    Returns:
        Region: The scaled region; C_{1,4} with k = 2 becomes C_{2,8}.

    Raises:
        RegionError: If k <= 0.
    """
    if not k > 0.0:
        raise RegionError(f"scale factor must be > 0, got {k}")
    if region.kind == "ball":
        center = (region.center[0] * k, region.center[1] * k, region.center[2] * k)
        return Region.model_validate_partial(
            region, {"center": center, "radius": region.radius * k}
        )
    return Region.model_validate_partial(
        region, {"R": region.R * k, "z_center": region.z_center * k}
    )


class RegionMask(BaseModel):
    """
    Nodes of a grid inside a region with their quadrature weights.

    Attributes:
        mask: Boolean array of grid shape.
        weights: Quadrature weight per node, zero outside the mask.
        clipped: Whether the region extends past the grid.
    """

    mask: np.ndarray
    weights: np.ndarray
    clipped: bool

    @property
    def indices(self) -> tuple[np.ndarray, ...]:
        return tuple(np.nonzero(self.mask))

    @property
    def measure(self) -> float:
        return float(self.weights.sum())

    def integrate(self, values: np.ndarray) -> float:
        return float(np.sum(self.weights * values))


def _trapezoid_weights(inside: np.ndarray, h: float, periodic: bool) -> np.ndarray:
    """Trapezoid weights along one axis: h inside, h/2 at the ends of each run."""
    weights = np.where(inside, h, 0.0)
    if periodic:
        before = np.roll(inside, 1)
        after = np.roll(inside, -1)
    else:
        before = np.concatenate(([False], inside[:-1]))
        after = np.concatenate((inside[1:], [False]))
    ends = inside & ~(before & after)
    weights[ends] *= 0.5
    single = inside & ~before & ~after
    weights[single] = h
    return weights


def _axial_distance(grid: Grid, z_center: float) -> np.ndarray:
    dz = grid.z - z_center
    if grid.z_periodic:
        dz = dz - grid.period * np.round(dz / grid.period)
    return np.abs(dz)


def is_clipped(grid: Grid, region: Region) -> bool:
    """Whether the region's meridional footprint extends past the grid."""
    slack = _MEMBERSHIP_SLACK * grid.h
    r_lo, r_hi = region.r_bounds
    if r_lo < grid.r_min - slack or r_hi > grid.r_max + slack:
        return True
    if grid.z_periodic:
        return False
    z_lo, z_hi = region.z_bounds
    return z_lo < grid.z_min - slack or z_hi > grid.z_max + slack


def region_mask(grid: Grid, region: Region) -> RegionMask:
    """
    Select the nodes of a grid inside a region.

    Cylinders use the trapezoid rule on the node lattice (nodes at the ends
    of each run half-weighted). A ball selects its meridional disk
    {(r - r_c)^2 + (z - z_c)^2 <= rho^2}; with the volume measure this
    integrates over the solid torus swept by rotating the ball about the
    z-axis.

    Args:
        grid (Grid): The grid.
        region (Region): The region; parabolic regions use their spatial part.

    Returns:
        RegionMask: Nodes, weights (h_r*h_z per node for ``area``,
        2*pi*r_i*h_r*h_z for ``volume``) and the clipped flag.

    Raises:
        EmptyRegionError: If no node lies inside the region.
    """
    slack = _MEMBERSHIP_SLACK * grid.h
    if region.kind == "ball":
        r_c = region.center_radius
        distance2 = (grid.rr - r_c) ** 2 + _axial_distance(grid, region.center[2])[
            None, :
        ] ** 2
        mask = distance2 <= (region.radius + slack) ** 2
        weights = np.where(mask, grid.h_r * grid.h_z, 0.0)
    else:
        r_lo, r_hi = region.r_bounds
        inside_r = (grid.r >= r_lo - slack) & (grid.r <= r_hi + slack)
        inside_z = _axial_distance(grid, region.z_center) <= region.B * region.R + slack
        w_r = _trapezoid_weights(inside_r, grid.h_r, periodic=False)
        w_z = _trapezoid_weights(inside_z, grid.h_z, periodic=grid.z_periodic)
        mask = inside_r[:, None] & inside_z[None, :]
        weights = w_r[:, None] * w_z[None, :]
    if not mask.any():
        raise EmptyRegionError(f"region {region.kind} contains no grid node")
    if region.measure == "volume":
        weights = 2.0 * np.pi * grid.rr * weights
    mask.setflags(write=False)
    weights.setflags(write=False)
    return RegionMask(mask=mask, weights=weights, clipped=is_clipped(grid, region))


def grid_weights(grid: Grid, measure: Measure = "volume") -> np.ndarray:
    """Trapezoid weights of the whole grid under the given measure."""
    inside_r = np.ones(grid.n_r, dtype=bool)
    inside_z = np.ones(grid.n_z, dtype=bool)
    w_r = _trapezoid_weights(inside_r, grid.h_r, periodic=False)
    w_z = _trapezoid_weights(inside_z, grid.h_z, periodic=grid.z_periodic)
    weights = w_r[:, None] * w_z[None, :]
    if measure == "volume":
        weights = 2.0 * np.pi * grid.rr * weights
    return weights
