"""
Validated run configuration.
"""

from typing import Literal, Optional

from pydantic import Field, PositiveInt, field_validator

from src.config import Config
from src.errors import UnknownFamilyError
from src.evolution.manufactured import FAMILIES
from src.geometry import Grid
from src.models import BaseModel
from src.utils.types import CflFactor, PositiveLength

MonitorName = Literal[
    "lambda",
    "kbar",
    "oscillation",
    "thm11",
    "thm12",
    "thm12_region",
    "kbar_bound",
    "vz",
    "vz_stream",
    "stream",
    "biot_savart",
    "energy",
    "divergence",
]

ANALYTIC_FAMILIES = ("zero", "swirl-gaussian", "vortex-ring", "rigid-swirl")


class InitialConditionSpec(BaseModel):
    """
    Initial condition: an analytic family with parameters, a manufactured
    family at t = 0 (``manufactured:<tag>``) or a stored snapshot
    (``snapshot:<path>``).
    """

    family: str = "zero"
    params: dict[str, float] = Field(default_factory=dict)

    @field_validator("family")
    @classmethod
    def check_family(cls, value: str) -> str:
        prefix, _, rest = value.partition(":")
        if prefix == "manufactured" and rest in FAMILIES:
            return value
        if prefix == "snapshot" and rest:
            return value
        if value not in ANALYTIC_FAMILIES:
            raise UnknownFamilyError(
                f"unknown initial condition {value!r}, expected one of "
                f"{list(ANALYTIC_FAMILIES)}, manufactured:<tag> or snapshot:<path>"
            )
        return value


class MonitorSpec(BaseModel):
    """
    One requested diagnostic, written ``name @ key=value,key=value``.

    Attributes:
        name: Monitor name.
        params: Evaluation point (r, z) or scale parameters (sigma, k, p, ...).
    """

    name: MonitorName
    params: dict[str, float] = Field(default_factory=dict)

    @property
    def label(self) -> str:
        """The monitor spec written back out, used as the point_or_region column."""
        if not self.params:
            return self.name
        args = ",".join(f"{key}={value!r}" for key, value in self.params.items())
        return f"{self.name} @ {args}"


class RunConfig(BaseModel):
    """
    Everything a simulation run needs.

    Attributes:
        grid: The grid.
        initial: Initial condition.
        viscosity: Fixed at 1, the equations are written at unit viscosity.
        t_end: Final time.
        cfl_advective: Advective CFL factor.
        cfl_diffusive: Diffusive CFL factor.
        forcing: Manufactured family whose forcing and boundary data drive the run.
        snapshot_stride: Steps between stored snapshots.
        retention: Trajectory retention window; defaults to the longest
            monitor look-back.
        monitors: Diagnostics evaluated at every stored snapshot.
    """

    grid: Grid
    initial: InitialConditionSpec = InitialConditionSpec()
    viscosity: Literal[1.0] = 1.0
    t_end: PositiveLength
    cfl_advective: CflFactor = Config.RUN.CFL_ADVECTIVE
    cfl_diffusive: CflFactor = Config.RUN.CFL_DIFFUSIVE
    forcing: Optional[str] = None
    snapshot_stride: PositiveInt = Config.RUN.SNAPSHOT_STRIDE
    retention: Optional[PositiveLength] = None
    monitors: list[MonitorSpec] = Field(default_factory=list)

    @field_validator("forcing")
    @classmethod
    def check_forcing(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in FAMILIES:
            raise UnknownFamilyError(
                f"unknown forcing {value!r}, expected one of {sorted(FAMILIES)}"
            )
        return value
