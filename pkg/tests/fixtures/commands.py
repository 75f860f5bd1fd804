from pathlib import Path

import pytest

from src.utils.data import ValidData

SMALL_GRID = f"""
[grid]
r_min = {ValidData.SmallGrid.r_min}
r_max = {ValidData.SmallGrid.r_max}
z_min = {ValidData.SmallGrid.z_min}
z_max = {ValidData.SmallGrid.z_max}
n_r = {ValidData.SmallGrid.n_r}
n_z = {ValidData.SmallGrid.n_z}
"""


def config_text(
    family: str = "rigid-swirl", monitors: tuple[str, ...] = (), **run: object
) -> str:
    """Config text on the small grid; dt is 2^-5 there, so t_end = 0.125 takes 4 steps."""
    run = {"t_end": 0.125, "snapshot_stride": 1, **run}
    lines = [SMALL_GRID, "[initial]", f"family = {family}", "", "[run]"]
    lines += [f"{key} = {value}" for key, value in run.items()]
    if monitors:
        lines += ["", "[monitors]", "monitor ="]
        lines += [f"    {spec}" for spec in monitors]
    return "\n".join(lines) + "\n"


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    path = tmp_path / "run.ini"
    path.write_text(config_text(monitors=("vz", "energy")))
    return path
