"""
Time windows over a trajectory.

Window quantities are sampled at every retained snapshot inside
[t_start, t_end]. When no snapshot sits exactly at t_start, the sample there
is interpolated linearly from the neighbouring snapshots. Integrals use the
trapezoid rule over these samples.
"""

import math
from typing import Callable

import numpy as np
from scipy.integrate import trapezoid

from src.errors import RetentionError
from src.evolution import Trajectory
from src.fields import FlowState
from src.geometry import Region, region_mask

StateFunctional = Callable[[FlowState], float]


def window_samples(
    trajectory: Trajectory,
    t_start: float,
    t_end: float,
    functional: StateFunctional,
    monitor: str = "window",
) -> tuple[np.ndarray, np.ndarray]:
    """
    Sample a functional of the state over [t_start, t_end].

    Args:
        trajectory (Trajectory): Retained history.
        t_start (float): Window start.
        t_end (float): Window end, a snapshot time.
        functional (StateFunctional): Quantity evaluated per snapshot.
        monitor (str): Name reported on a retention shortfall.

    Returns:
        tuple[np.ndarray, np.ndarray]: Sample times and values.

    Raises:
        RetentionError: If the retained history starts after ``t_start``.
    """
    if not trajectory.covers(t_start):
        available = t_end - trajectory[0].t if len(trajectory) else 0.0
        raise RetentionError(monitor, t_end - t_start, available)
    states = trajectory.window(t_start, t_end)
    times = [s.t for s in states]
    values = [functional(s) for s in states]
    if times[0] < t_start:
        t_before, t_after = times[0], times[1]
        theta = (t_start - t_before) / (t_after - t_before)
        times[0] = t_start
        values[0] = (1.0 - theta) * values[0] + theta * values[1]
    return np.array(times), np.array(values)


def window_integral(times: np.ndarray, values: np.ndarray) -> float:
    if len(times) < 2:
        return 0.0
    return float(trapezoid(values, times))


def spacetime_norm(
    trajectory: Trajectory,
    components: Callable[[FlowState], list[np.ndarray]],
    region: Region,
    p: float = 2.0,
    t: float | None = None,
    frozen: bool = False,
) -> float:
    """
    L^p norm over the parabolic region ending at t.

    Args:
        trajectory (Trajectory): Retained history.
        components (Callable): Node arrays whose pointwise magnitude is measured.
        region (Region): Parabolic region, spatial part integrated with its measure.
        p (float): Exponent in [1, inf], used in space and time alike.
        t (float | None): Window end, the latest snapshot by default.
        frozen (bool): Treat the snapshot at t as constant over the window
            instead of reading the history.

    Returns:
        float: (integral over the window of ||f(s)||_p^p ds)^(1/p), or the
        space-time max for p = inf.
    """
    t = trajectory.latest.t if t is None else t
    spatial = region.spatial()

    def _spatial(state: FlowState) -> float:
        selected = region_mask(state.grid, spatial)
        magnitude = np.sqrt(sum(c**2 for c in components(state)))
        if math.isinf(p):
            return float(np.max(magnitude[selected.mask]))
        return float(np.sum(selected.weights * magnitude**p))

    if frozen:
        value = _spatial(trajectory.at(t))
        if math.isinf(p):
            return value
        return (region.duration * value) ** (1.0 / p)
    t_start, t_end = region.time_window(t)
    times, values = window_samples(trajectory, t_start, t_end, _spatial)
    if math.isinf(p):
        return float(np.max(values))
    return window_integral(times, values) ** (1.0 / p)
