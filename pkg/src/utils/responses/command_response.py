"""Module defining the CommandResponse class for standardized command results."""

from enum import IntEnum
from typing import Any

from pydantic import Field, field_validator

from src.errors import (
    AxiswirlError,
    BlowUpError,
    ConfigError,
    EllipticConvergenceError,
    GridError,
    RegionError,
    RetentionError,
    ScalingError,
    SnapshotError,
    UnknownFamilyError,
)
from src.models import BaseModel


class ExitStatus(IntEnum):
    """Process exit codes of the command line."""

    OK = 0
    FAILURE = 1
    CONFIG_ERROR = 2
    BLOW_UP = 3
    ELLIPTIC_FAILURE = 4
    RETENTION_ERROR = 5
    SNAPSHOT_ERROR = 6
    SCALING_ERROR = 7


# First match wins, so subclasses precede their bases.
_STATUS_BY_ERROR: tuple[tuple[type[AxiswirlError], ExitStatus], ...] = (
    (BlowUpError, ExitStatus.BLOW_UP),
    (EllipticConvergenceError, ExitStatus.ELLIPTIC_FAILURE),
    (RetentionError, ExitStatus.RETENTION_ERROR),
    (SnapshotError, ExitStatus.SNAPSHOT_ERROR),
    (ScalingError, ExitStatus.SCALING_ERROR),
    (ConfigError, ExitStatus.CONFIG_ERROR),
    (GridError, ExitStatus.CONFIG_ERROR),
    (RegionError, ExitStatus.CONFIG_ERROR),
    (UnknownFamilyError, ExitStatus.CONFIG_ERROR),
)


class CommandResponse(BaseModel):
    """
    Outcome of a command.

    Attributes:
        message: Human readable summary, never empty.
        status_code: Exit status of the process.
        data: Paths written and headline numbers.
    """

    message: str
    status_code: ExitStatus = ExitStatus.OK
    data: dict[str, Any] = Field(default_factory=dict)

    @field_validator("message")
    @classmethod
    def check_message(cls, value: str) -> str:
        if not value:
            raise ValueError("message must be provided")
        return value

    @property
    def ok(self) -> bool:
        return self.status_code == ExitStatus.OK

    @classmethod
    def from_error(cls, error: AxiswirlError) -> "CommandResponse":
        """Map a simulator error to its exit status."""
        status_code = next(
            (status for kind, status in _STATUS_BY_ERROR if isinstance(error, kind)),
            ExitStatus.FAILURE,
        )
        data: dict[str, Any] = {"error": type(error).__name__}
        if isinstance(error, BlowUpError) and error.dump_path:
            data["dump"] = error.dump_path
        if isinstance(error, RetentionError):
            data["monitor"] = error.monitor
        if isinstance(error, ConfigError):
            data["key"] = error.key
        return cls(message=str(error), status_code=status_code, data=data)
