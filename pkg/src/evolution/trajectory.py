"""
Retained history of a run for the time-window diagnostics.
"""

import bisect
import logging
from typing import Iterator, Optional

import numpy as np

from src.errors import SnapshotError
from src.fields import FlowState

logger = logging.getLogger(__name__)


class Trajectory:
    """
    Time-ordered snapshots within a retention window.

    Appending evicts snapshots older than ``latest.t - retention`` except the
    newest of them, so a window starting at ``latest.t - retention`` stays
    covered. The two latest snapshots are always kept.

    Args:
        retention (float | None): Retention window, unbounded when None.
        t0 (float): Start time of the run.
        m0 (float): ||Gamma(t0)||_inf, fixed for the whole run.
    """

    def __init__(self, retention: Optional[float], t0: float, m0: float) -> None:
        self.retention = retention
        self.t0 = t0
        self.m0 = m0
        self._snapshots: list[FlowState] = []

    @classmethod
    def start(
        cls,
        state: FlowState,
        retention: Optional[float] = None,
        t0: Optional[float] = None,
        m0: Optional[float] = None,
    ) -> "Trajectory":
        """
        Open a trajectory at an initial state.

        ``t0`` and ``m0`` default to the state's time and sup |Gamma|; a
        restarted run passes the values recorded by the original run.
        """
        trajectory = cls(
            retention,
            state.t if t0 is None else t0,
            state.gamma.max_abs() if m0 is None else m0,
        )
        trajectory.append(state)
        return trajectory

    def __len__(self) -> int:
        return len(self._snapshots)

    def __iter__(self) -> Iterator[FlowState]:
        return iter(self._snapshots)

    def __getitem__(self, index: int) -> FlowState:
        return self._snapshots[index]

    @property
    def latest(self) -> FlowState:
        return self._snapshots[-1]

    @property
    def times(self) -> np.ndarray:
        return np.array([s.t for s in self._snapshots])

    def append(self, state: FlowState) -> None:
        """
        Add a snapshot.

        Raises:
            SnapshotError: If the time does not exceed the latest snapshot's.
        """
        if self._snapshots and not state.t > self.latest.t:
            raise SnapshotError(
                f"non-monotone timestamps: {state.t!r} after {self.latest.t!r}"
            )
        self._snapshots.append(state)
        self._evict()

    def _evict(self) -> None:
        if self.retention is None:
            return
        start = self.latest.t - self.retention
        times = [s.t for s in self._snapshots]
        keep_from = min(
            max(bisect.bisect_right(times, start) - 1, 0), max(len(times) - 2, 0)
        )
        if keep_from:
            logger.debug("Evicting %d snapshots before t=%r", keep_from, start)
            del self._snapshots[:keep_from]

    def covers(self, t_start: float) -> bool:
        """Whether a window starting at ``t_start`` lies within the retained history."""
        return bool(self._snapshots) and self._snapshots[0].t <= t_start

    def window(self, t_start: float, t_end: float) -> list[FlowState]:
        """
        Snapshots needed for a window [t_start, t_end].

        Returns the snapshots inside the window together with the last one
        before ``t_start``, which the trapezoid rule interpolates from.
        """
        times = [s.t for s in self._snapshots]
        lo = max(bisect.bisect_right(times, t_start) - 1, 0)
        hi = bisect.bisect_right(times, t_end)
        return self._snapshots[lo:hi]

    def at(self, t: float) -> FlowState:
        """The snapshot at time t exactly."""
        for state in reversed(self._snapshots):
            if state.t == t:
                return state
        raise SnapshotError(f"no snapshot at t={t!r}")
