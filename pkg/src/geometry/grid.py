"""
Uniform annular (r, z) grids.

The computational domain never contains the symmetry axis: every grid has
r_min > 0, so the 1/r factors of the cylindrical operators stay bounded.
"""

import math
from functools import lru_cache

import numpy as np
from pydantic import ValidationError, model_validator

from src.errors import GridError
from src.models import BaseModel


class Grid(BaseModel):
    """
    Annular cylindrical mesh with uniform spacing in r and z.

    Attributes:
        r_min: Inner radius, strictly positive.
        r_max: Outer radius.
        z_min: Lower end of the axial extent.
        z_max: Upper end of the axial extent.
        n_r: Number of radial nodes.
        n_z: Number of axial nodes.
        z_periodic: Whether z wraps around; the node at z_max is then
            identified with the node at z_min and is not stored.
    """

    r_min: float
    r_max: float
    z_min: float
    z_max: float
    n_r: int
    n_z: int
    z_periodic: bool = False

    @model_validator(mode="after")
    def check_extents(self) -> "Grid":
        values = (self.r_min, self.r_max, self.z_min, self.z_max)
        if not all(math.isfinite(v) for v in values):
            raise ValueError("grid extents must be finite")
        if self.r_min <= 0.0:
            raise ValueError("axis excluded: r_min must be > 0")
        if self.r_max <= self.r_min:
            raise ValueError("non-positive radial extent: r_max must exceed r_min")
        if self.z_max <= self.z_min:
            raise ValueError("non-positive axial extent: z_max must exceed z_min")
        if self.n_r < 8 or self.n_z < 8:
            raise ValueError("n_r and n_z must both be at least 8")
        if not (self.h_r > 0.0 and self.h_z > 0.0):
            raise ValueError("grid spacings must be positive")
        return self

    @property
    def h_r(self) -> float:
        return (self.r_max - self.r_min) / (self.n_r - 1)

    @property
    def h_z(self) -> float:
        if self.z_periodic:
            return (self.z_max - self.z_min) / self.n_z
        return (self.z_max - self.z_min) / (self.n_z - 1)

    @property
    def h(self) -> float:
        """Smallest spacing, used by the CFL limits."""
        return min(self.h_r, self.h_z)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_r, self.n_z)

    @property
    def period(self) -> float:
        return self.z_max - self.z_min

    @property
    def r(self) -> np.ndarray:
        return _coordinates(self)[0]

    @property
    def z(self) -> np.ndarray:
        return _coordinates(self)[1]

    @property
    def rr(self) -> np.ndarray:
        """Radial coordinate of every node, shape (n_r, n_z)."""
        return _coordinates(self)[2]

    @property
    def zz(self) -> np.ndarray:
        """Axial coordinate of every node, shape (n_r, n_z)."""
        return _coordinates(self)[3]

    def boundary_mask(self) -> np.ndarray:
        """Nodes on non-periodic boundaries (Dirichlet nodes)."""
        mask = np.zeros(self.shape, dtype=bool)
        mask[0, :] = True
        mask[-1, :] = True
        if not self.z_periodic:
            mask[:, 0] = True
            mask[:, -1] = True
        return mask

    def scaled(self, k: float) -> "Grid":
        """Grid with every coordinate divided by k (the rescaled variables)."""
        return Grid(
            r_min=self.r_min / k,
            r_max=self.r_max / k,
            z_min=self.z_min / k,
            z_max=self.z_max / k,
            n_r=self.n_r,
            n_z=self.n_z,
            z_periodic=self.z_periodic,
        )


def make_grid(
    r_min: float,
    r_max: float,
    z_min: float,
    z_max: float,
    n_r: int,
    n_z: int,
    z_periodic: bool = False,
) -> Grid:
    """
    Build a validated grid.

    Args:
        r_min (float): Inner radius, must be > 0.
        r_max (float): Outer radius.
        z_min (float): Lower axial bound.
        z_max (float): Upper axial bound.
        n_r (int): Radial node count, at least 8.
        n_z (int): Axial node count, at least 8.
        z_periodic (bool): Periodic wrap in z.

    Returns:
        Grid: The grid, node r_i = r_min + i*h_r.

    Raises:
        GridError: If any invariant fails; the message names the failure.
    """
    try:
        return Grid(
            r_min=r_min,
            r_max=r_max,
            z_min=z_min,
            z_max=z_max,
            n_r=n_r,
            n_z=n_z,
            z_periodic=z_periodic,
        )
    except ValidationError as e:
        messages = "; ".join(str(err["msg"]) for err in e.errors())
        raise GridError(messages) from e


@lru_cache(maxsize=64)
def _coordinates(grid: Grid) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    r = grid.r_min + np.arange(grid.n_r) * grid.h_r
    z = grid.z_min + np.arange(grid.n_z) * grid.h_z
    rr, zz = np.meshgrid(r, z, indexing="ij")
    for array in (r, z, rr, zz):
        array.setflags(write=False)
    return r, z, rr, zz
