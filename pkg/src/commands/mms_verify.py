"""
The ``mms-verify`` command: grid refinement study against a manufactured
solution.
"""

import csv
import logging
import math
import os
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from pydantic import ValidationError

from src.config import Config
from src.errors import AxiswirlError, ConfigError
from src.evolution import InitialConditionSpec, RunConfig, Simulation, manufactured
from src.geometry import make_grid
from src.models import BaseModel
from src.utils.responses import CommandResponse
from src.utils.types import PositiveLength

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike[str]]

GridSize = tuple[int, int]

CONVERGENCE_COLUMNS = ("grid", "h", "err_gamma", "err_omega", "order_gamma", "order_omega")


class MmsStudy(BaseModel):
    """
    Domain and final time of a refinement study, set with ``--set mms.key=value``.

    Attributes:
        r_min: Inner radius.
        r_max: Outer radius.
        z_min: Lower height.
        z_max: Upper height.
        t_end: Final time.
    """

    r_min: float = Config.MMS.R_MIN
    r_max: float = Config.MMS.R_MAX
    z_min: float = Config.MMS.Z_MIN
    z_max: float = Config.MMS.Z_MAX
    t_end: PositiveLength = Config.MMS.T_END


class ConvergenceRow(BaseModel):
    """
    Errors of one refinement level.

    Attributes:
        n_r: Radial nodes.
        n_z: Axial nodes.
        h: Grid spacing, min(h_r, h_z).
        err_gamma: Max nodal error of Gamma at the final time.
        err_omega: Max nodal error of Omega at the final time.
        order_gamma: Observed order against the previous level.
        order_omega: Observed order against the previous level.
    """

    n_r: int
    n_z: int
    h: float
    err_gamma: float
    err_omega: float
    order_gamma: Optional[float] = None
    order_omega: Optional[float] = None

    def to_csv(self) -> list[str]:
        def _order(value: Optional[float]) -> str:
            return "" if value is None else repr(value)

        return [
            f"{self.n_r}x{self.n_z}",
            repr(self.h),
            repr(self.err_gamma),
            repr(self.err_omega),
            _order(self.order_gamma),
            _order(self.order_omega),
        ]


def observed_order(
    coarse_error: float, fine_error: float, coarse_h: float, fine_h: float
) -> Optional[float]:
    """log(e_coarse / e_fine) / log(h_coarse / h_fine); None when an error vanishes."""
    if not (coarse_error > 0.0 and fine_error > 0.0):
        return None
    return math.log(coarse_error / fine_error) / math.log(coarse_h / fine_h)


def mms_errors(
    family: str, size: GridSize, study: Optional[MmsStudy] = None
) -> tuple[float, float, float]:
    """
    Run the forced problem of a family on an n_r x n_z grid.

    Returns:
        tuple[float, float, float]: (h, max error of Gamma, max error of Omega)
        at ``study.t_end``.

    Raises:
        UnknownFamilyError: If the family is not registered.
        GridError: If the study domain is not a valid grid.
    """
    study = study or MmsStudy()
    solution = manufactured(family)
    n_r, n_z = size
    grid = make_grid(study.r_min, study.r_max, study.z_min, study.z_max, n_r, n_z)
    config = RunConfig(
        grid=grid,
        initial=InitialConditionSpec(family=f"manufactured:{family}"),
        t_end=study.t_end,
        forcing=family,
    )
    simulation = Simulation(config)
    final = simulation.run(simulation.initial())
    err_gamma = float(
        np.max(np.abs(final.gamma.values - solution.evaluate("gamma", grid, final.t)))
    )
    err_omega = float(
        np.max(np.abs(final.omega.values - solution.evaluate("omega", grid, final.t)))
    )
    logger.info(
        "MMS %s %dx%d: err_gamma=%.3e err_omega=%.3e", family, n_r, n_z, err_gamma, err_omega
    )
    return grid.h, err_gamma, err_omega


def convergence_study(
    family: str, sizes: Sequence[GridSize], study: Optional[MmsStudy] = None
) -> list[ConvergenceRow]:
    """
    Errors and observed orders on successively refined grids.

    Args:
        family (str): Manufactured family.
        sizes (Sequence[GridSize]): (n_r, n_z) per level, both increasing.
        study (MmsStudy | None): Domain and final time.

    Returns:
        list[ConvergenceRow]: One row per grid.

    Raises:
        ConfigError: If the sizes do not increase in both directions.
    """
    for coarse, fine in zip(sizes, sizes[1:]):
        if not (fine[0] > coarse[0] and fine[1] > coarse[1]):
            raise ConfigError("grids", "grid sizes must be strictly increasing")
    rows: list[ConvergenceRow] = []
    for size in sizes:
        h, err_gamma, err_omega = mms_errors(family, size, study)
        row = ConvergenceRow(
            n_r=size[0], n_z=size[1], h=h, err_gamma=err_gamma, err_omega=err_omega
        )
        if rows:
            previous = rows[-1]
            row = ConvergenceRow.model_validate_partial(
                row,
                {
                    "order_gamma": observed_order(
                        previous.err_gamma, err_gamma, previous.h, h
                    ),
                    "order_omega": observed_order(
                        previous.err_omega, err_omega, previous.h, h
                    ),
                },
            )
        rows.append(row)
    return rows


def write_convergence(path: PathLike, rows: Sequence[ConvergenceRow]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CONVERGENCE_COLUMNS)
        writer.writerows(row.to_csv() for row in rows)
    return path


def parse_sizes(text: str) -> list[GridSize]:
    """Grid sizes written ``32x64,64x128``; a bare ``n`` means n x n."""
    sizes: list[GridSize] = []
    for token in filter(None, (part.strip() for part in text.split(","))):
        n_r, separator, n_z = token.lower().partition("x")
        try:
            sizes.append((int(n_r), int(n_z if separator else n_r)))
        except ValueError:
            raise ConfigError("grids", f"expected sizes like 32x64, got {token!r}") from None
    if not sizes:
        raise ConfigError("grids", "no grid size given")
    return sizes


def parse_study(overrides: Iterable[str] = ()) -> MmsStudy:
    """
    Study domain from ``mms.key=value`` assignments on top of the defaults.

    Raises:
        ConfigError: On a malformed assignment, an unknown key or a bad value.
    """
    data: dict[str, str] = {}
    for override in overrides:
        target, separator, value = override.partition("=")
        section, dot, key = target.strip().partition(".")
        if not separator or section != "mms" or not dot:
            raise ConfigError(override, "override must read mms.key=value")
        data[key.strip()] = value.strip()
    try:
        return MmsStudy.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else "study"
        raise ConfigError(f"mms.{key}", str(error["msg"])) from e


def cmd_mms_verify(
    family: str,
    grids: str = Config.MMS.GRIDS,
    output: Optional[PathLike] = None,
    overrides: Iterable[str] = (),
) -> CommandResponse:
    """
    command: mms-verify <family> [grids]
    Convergence table of a manufactured family, e.g. ``coupled 32x64,64x128,128x256``.

    Args:
        family (str): Manufactured family.
        grids (str): Comma separated grid sizes ``n_r x n_z``.
        output (PathLike | None): Output directory.
        overrides (Iterable[str]): ``mms.r_min``, ``mms.r_max``, ``mms.z_min``,
            ``mms.z_max`` and ``mms.t_end`` assignments.

    Returns:
        CommandResponse: The table location and the finest observed orders.
    """
    try:
        rows = convergence_study(family, parse_sizes(grids), parse_study(overrides))
        path = write_convergence(
            Path(output or Config.OUTPUT.ROOT)
            / Config.MMS.CONVERGENCE_PATTERN.format(family=family),
            rows,
        )
    except AxiswirlError as e:
        logger.error("MMS verification failed: %s", e)
        return CommandResponse.from_error(e)
    return CommandResponse(
        message=f"Convergence table written to {path}",
        data={
            "table": str(path),
            "order_gamma": rows[-1].order_gamma,
            "order_omega": rows[-1].order_omega,
        },
    )
