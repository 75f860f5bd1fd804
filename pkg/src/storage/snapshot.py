"""
Binary snapshot files.

Layout: the magic line ``AXISWIRL1\\n``, a little-endian uint32 header
length, a UTF-8 JSON header, then the row-major ``<f8`` arrays of every
field in header order. The header carries the sha256 of the payload.
"""

import hashlib
import logging
import os
from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import ValidationError

from src.config import Config
from src.errors import SnapshotError
from src.fields import FlowState, ScalarField
from src.geometry import Grid
from src.models import BaseModel

logger = logging.getLogger(__name__)

FIELDS = ("gamma", "omega", "stream", "v_r", "v_theta", "v_z", "omega_theta")
_LENGTH_BYTES = 4

PathLike = Union[str, os.PathLike[str]]


class SnapshotHeader(BaseModel):
    """
    JSON header of a snapshot file.

    Attributes:
        grid: Grid of every field.
        t: Snapshot time.
        step: Step index within the run.
        t0: Start time of the run.
        m0: ||Gamma(t0)||_inf of the run.
        fields: Field names in payload order.
        dtype: Payload element type, always little-endian float64.
        sha256: Hex digest of the payload.
    """

    grid: Grid
    t: float
    step: int
    t0: float
    m0: float
    fields: list[str]
    dtype: str = Config.SNAPSHOT.DTYPE
    sha256: str


def encode_snapshot(state: FlowState, step: int, t0: float, m0: float) -> bytes:
    """Serialise a state to snapshot bytes."""
    arrays = state.fields()
    payload = b"".join(
        np.ascontiguousarray(arrays[name].values, dtype=Config.SNAPSHOT.DTYPE).tobytes()
        for name in FIELDS
    )
    header = SnapshotHeader(
        grid=state.grid,
        t=state.t,
        step=step,
        t0=t0,
        m0=m0,
        fields=list(FIELDS),
        sha256=hashlib.sha256(payload).hexdigest(),
    )
    encoded = header.model_dump_json().encode("utf-8")
    return (
        Config.SNAPSHOT.MAGIC
        + len(encoded).to_bytes(_LENGTH_BYTES, "little")
        + encoded
        + payload
    )


def decode_snapshot(data: bytes) -> tuple[SnapshotHeader, FlowState]:
    """
    Parse snapshot bytes.

    Args:
        data (bytes): File contents.

    Returns:
        tuple[SnapshotHeader, FlowState]: Header and the bit-exact state.

    Raises:
        SnapshotError: On a bad magic line, malformed header, size mismatch
            or checksum mismatch.
    """
    magic = Config.SNAPSHOT.MAGIC
    if not data.startswith(magic):
        raise SnapshotError("bad magic, not a snapshot file")
    offset = len(magic)
    length = int.from_bytes(data[offset : offset + _LENGTH_BYTES], "little")
    offset += _LENGTH_BYTES
    try:
        header = SnapshotHeader.model_validate_json(data[offset : offset + length])
    except ValidationError as e:
        raise SnapshotError(f"malformed snapshot header: {e}") from e
    if header.dtype != Config.SNAPSHOT.DTYPE or sorted(header.fields) != sorted(FIELDS):
        raise SnapshotError(f"unsupported snapshot layout {header.dtype} {header.fields}")
    payload = data[offset + length :]
    size = header.grid.n_r * header.grid.n_z
    if len(payload) != 8 * size * len(header.fields):
        raise SnapshotError(
            f"payload holds {len(payload)} bytes, header grid needs "
            f"{8 * size * len(header.fields)}"
        )
    if hashlib.sha256(payload).hexdigest() != header.sha256:
        raise SnapshotError("corrupt checksum")
    values = np.frombuffer(payload, dtype=header.dtype).reshape(
        len(header.fields), *header.grid.shape
    )
    fields = {
        name: ScalarField.from_array(header.grid, values[i], name)
        for i, name in enumerate(header.fields)
    }
    try:
        state = FlowState(t=header.t, derived_fresh=True, **fields)
    except ValidationError as e:
        raise SnapshotError(f"inconsistent snapshot fields: {e}") from e
    return header, state


def write_snapshot(
    path: PathLike, state: FlowState, step: int, t0: float, m0: float
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_snapshot(state, step, t0, m0))
    return path


def read_snapshot(path: PathLike) -> tuple[SnapshotHeader, FlowState]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise SnapshotError(f"cannot read snapshot {path}: {e}") from e
    return decode_snapshot(data)


class SnapshotStore:
    """
    Snapshot files of one run inside an output directory.

    Args:
        directory (PathLike): Output directory of the run.
        pattern (str): File name pattern formatted with ``step``.
    """

    def __init__(
        self, directory: PathLike, pattern: str = Config.OUTPUT.SNAPSHOT_PATTERN
    ) -> None:
        self.directory = Path(directory)
        self.pattern = pattern

    def path(self, step: int) -> Path:
        return self.directory / self.pattern.format(step=step)

    def create(self, state: FlowState, step: int, t0: float, m0: float) -> Path:
        """
        Write the snapshot of a step.

        Returns:
            Path: The written file.
        """
        path = write_snapshot(self.path(step), state, step, t0, m0)
        logger.info("Wrote snapshot step=%d t=%r to %s", step, state.t, path)
        return path

    def get_by_query(
        self, t_min: Optional[float] = None, t_max: Optional[float] = None
    ) -> list[tuple[SnapshotHeader, FlowState]]:
        """
        All snapshots of the directory in step order, optionally within [t_min, t_max].

        Raises:
            SnapshotError: If times do not increase with the step or a file
                is corrupt.
        """
        pattern = self.pattern.split("{", 1)[0] + "*" + Path(self.pattern).suffix
        loaded = [read_snapshot(p) for p in sorted(self.directory.glob(pattern))]
        loaded.sort(key=lambda item: item[0].step)
        times = [header.t for header, _ in loaded]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise SnapshotError(f"non-monotone timestamps in {self.directory}")
        return [
            item
            for item in loaded
            if (t_min is None or item[0].t >= t_min)
            and (t_max is None or item[0].t <= t_max)
        ]
