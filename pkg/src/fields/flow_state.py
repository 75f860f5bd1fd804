"""
The prognostic pair (Gamma, Omega) with the fields derived from it.
"""

import numpy as np
from pydantic import model_validator

from src.fields.scalar_field import ScalarField, same_grid
from src.geometry import Grid
from src.models import BaseModel

# Tolerance on the pointwise identities v_theta = Gamma / r, omega_theta = r Omega.
_IDENTITY_RTOL = 1.0e-12


class FlowState(BaseModel):
    """
    Snapshot of an axisymmetric flow at one time.

    Attributes:
        t: Time.
        gamma: Swirl moment Gamma = r v_theta.
        omega: Reduced vorticity Omega = omega_theta / r.
        stream: Angular stream function L_theta.
        v_r: Radial velocity, -D_z L_theta.
        v_theta: Swirl velocity, Gamma / r.
        v_z: Axial velocity, (1/r) D_r(r L_theta).
        omega_theta: Angular vorticity, r Omega.
        derived_fresh: The velocity comes from the current stream function
            and the stream function from the current omega_theta.
    """

    t: float
    gamma: ScalarField
    omega: ScalarField
    stream: ScalarField
    v_r: ScalarField
    v_theta: ScalarField
    v_z: ScalarField
    omega_theta: ScalarField
    derived_fresh: bool = True

    @model_validator(mode="after")
    def check_identities(self) -> "FlowState":
        grid = same_grid(*self.fields().values())
        if not np.allclose(
            self.v_theta.values, self.gamma.values / grid.rr, rtol=_IDENTITY_RTOL, atol=0.0
        ):
            raise ValueError("v_theta differs from gamma / r")
        if not np.allclose(
            self.omega_theta.values,
            grid.rr * self.omega.values,
            rtol=_IDENTITY_RTOL,
            atol=0.0,
        ):
            raise ValueError("omega_theta differs from r * omega")
        return self

    @property
    def grid(self) -> Grid:
        return self.gamma.grid

    def fields(self) -> dict[str, ScalarField]:
        """All fields keyed by name, in snapshot file order."""
        return {
            "gamma": self.gamma,
            "omega": self.omega,
            "stream": self.stream,
            "v_r": self.v_r,
            "v_theta": self.v_theta,
            "v_z": self.v_z,
            "omega_theta": self.omega_theta,
        }

    def speed(self) -> np.ndarray:
        """Pointwise |v| over all three velocity components."""
        return np.sqrt(self.v_r.values**2 + self.v_theta.values**2 + self.v_z.values**2)

    def meridional_speed(self) -> np.ndarray:
        """Pointwise |b| = (v_r^2 + v_z^2)^{1/2}."""
        return np.hypot(self.v_r.values, self.v_z.values)
