from .flow_state import FlowState
from .interpolation import interpolate, interpolate_values
from .norms import kinetic_energy, norm, vector_norm
from .operators import (
    curl_r,
    curl_theta,
    curl_z,
    cyl_laplacian,
    d2r,
    d2z,
    ddr,
    ddz,
    divergence_cyl,
)
from .scalar_field import ScalarField, same_grid

__all__ = [
    "FlowState",
    "ScalarField",
    "curl_r",
    "curl_theta",
    "curl_z",
    "cyl_laplacian",
    "d2r",
    "d2z",
    "ddr",
    "ddz",
    "divergence_cyl",
    "interpolate",
    "interpolate_values",
    "kinetic_energy",
    "norm",
    "same_grid",
    "vector_norm",
]
