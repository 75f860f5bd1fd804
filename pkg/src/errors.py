"""
Exception types raised by the simulator and the diagnostics.
"""

from typing import Optional


class AxiswirlError(Exception):
    """Base class for all simulator errors."""


class GridError(AxiswirlError, ValueError):
    """Invalid grid parameters."""


class RegionError(AxiswirlError, ValueError):
    """Invalid region parameters or a region that does not fit its use."""


class EmptyRegionError(RegionError):
    """The region contains no grid node."""


class FieldError(AxiswirlError, ValueError):
    """Non-finite field values or mismatched shapes."""


class EllipticConvergenceError(AxiswirlError, RuntimeError):
    """The stream function solve did not reach its tolerance."""

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class BlowUpError(AxiswirlError, RuntimeError):
    """Non-finite values appeared while stepping."""

    def __init__(self, t: float, dump_path: Optional[str] = None) -> None:
        message = f"non-finite values detected at t={t!r}"
        if dump_path:
            message += f", state dumped to {dump_path}"
        super().__init__(message)
        self.t = t
        self.dump_path = dump_path


class RetentionError(AxiswirlError, ValueError):
    """A monitor needs more trajectory history than is retained."""

    def __init__(self, monitor: str, lookback: float, available: float) -> None:
        super().__init__(
            f"monitor {monitor} needs a look-back of {lookback!r}, "
            f"only {available!r} is available"
        )
        self.monitor = monitor
        self.lookback = lookback
        self.available = available


class ConfigError(AxiswirlError, ValueError):
    """Invalid run configuration, naming the offending key."""

    def __init__(self, key: str, message: str) -> None:
        super().__init__(f"{key}: {message}")
        self.key = key


class SnapshotError(AxiswirlError, ValueError):
    """Corrupt or inconsistent snapshot files."""


class ScalingError(AxiswirlError, ValueError):
    """Rescaling factor that does not map grid nodes onto grid nodes."""


class UnknownFamilyError(AxiswirlError, ValueError):
    """Unregistered initial condition or manufactured family."""


class StepSizeError(AxiswirlError, ValueError):
    """Time step above the stability limit of the state."""

    def __init__(self, dt: float, limit: float) -> None:
        super().__init__(f"time step {dt!r} exceeds the stability limit {limit!r}")
        self.dt = dt
        self.limit = limit
