from .monitor_series import COLUMNS, MonitorRow, MonitorSeries
from .snapshot import (
    FIELDS,
    SnapshotHeader,
    SnapshotStore,
    decode_snapshot,
    encode_snapshot,
    read_snapshot,
    write_snapshot,
)

__all__ = [
    "COLUMNS",
    "FIELDS",
    "MonitorRow",
    "MonitorSeries",
    "SnapshotHeader",
    "SnapshotStore",
    "decode_snapshot",
    "encode_snapshot",
    "read_snapshot",
    "write_snapshot",
]
