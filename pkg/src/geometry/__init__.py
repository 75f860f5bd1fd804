from .grid import Grid, make_grid
from .region import (
    Region,
    RegionMask,
    annular_cylinder,
    ball,
    grid_weights,
    is_clipped,
    parabolic,
    region_mask,
    scale_region,
    sigma_region,
)

__all__ = [
    "Grid",
    "make_grid",
    "Region",
    "RegionMask",
    "annular_cylinder",
    "ball",
    "grid_weights",
    "is_clipped",
    "parabolic",
    "region_mask",
    "scale_region",
    "sigma_region",
]
