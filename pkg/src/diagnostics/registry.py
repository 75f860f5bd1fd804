"""
Monitor specs resolved into evaluators with their look-back windows.
"""

import logging
import math
from typing import Callable, Optional

from src.diagnostics import monitors
from src.diagnostics.bound_report import BoundReport
from src.elliptic import BallQuadrature
from src.errors import ConfigError, RetentionError
from src.evolution import MonitorSpec, Trajectory
from src.geometry import annular_cylinder, parabolic
from src.models import BaseModel

logger = logging.getLogger(__name__)

Evaluator = Callable[[Trajectory], BoundReport]

# Parameters each monitor accepts, with their defaults.
PARAMETERS: dict[str, dict[str, Optional[float]]] = {
    "lambda": {"A": 1.0, "B": 4.0, "S": 1.0, "R": 1.0, "z_center": 0.0},
    "kbar": {"sigma": 1.0, "R": 1.0, "z_center": 0.0},
    "oscillation": {"sigma": 1.0, "R": 1.0, "z_center": 0.0},
    "thm11": {"r": None, "z": 0.0},
    "thm12": {"r": None, "z": 0.0},
    "thm12_region": {"k": 1.0},
    "kbar_bound": {"k": 1.0},
    "vz": {},
    "vz_stream": {},
    "stream": {"r": None, "z": 0.0},
    "biot_savart": {"r": None, "z": 0.0, "p": 2.0},
    "energy": {},
    "divergence": {},
}

# Largest admissible distance from the axis for the pointwise bounds.
_POINT_LIMITS = {"thm11": 0.5, "thm12": 0.5, "stream": 0.5, "biot_savart": 0.5}


class MonitorPlan(BaseModel):
    """
    A monitor ready to run.

    Attributes:
        spec: The monitor spec it was built from.
        lookback: History the monitor needs behind the evaluation time.
        evaluator: Produces the report at the latest snapshot.
    """

    spec: MonitorSpec
    lookback: float
    evaluator: Evaluator

    def armed(self, trajectory: Trajectory) -> bool:
        """Whether the look-back window starts after the run start and is retained."""
        start = trajectory.latest.t - self.lookback
        return start >= trajectory.t0 and trajectory.covers(start)

    def evaluate(self, trajectory: Trajectory) -> Optional[BoundReport]:
        """The report at the latest snapshot, None while not armed."""
        if not self.armed(trajectory):
            return None
        report = self.evaluator(trajectory)
        if report.clipped:
            logger.warning("Monitor %s evaluated on a clipped region", self.spec.label)
        return report


def _resolve(spec: MonitorSpec) -> dict[str, float]:
    allowed = PARAMETERS[spec.name]
    for key in spec.params:
        if key not in allowed:
            raise ConfigError(
                f"monitors.{spec.name}.{key}",
                f"unknown parameter, expected one of {sorted(allowed)}",
            )
    values: dict[str, float] = {}
    for key, default in allowed.items():
        value = spec.params.get(key, default)
        if value is None:
            raise ConfigError(f"monitors.{spec.name}.{key}", "required parameter missing")
        if not math.isfinite(value):
            raise ConfigError(f"monitors.{spec.name}.{key}", "must be finite")
        values[key] = float(value)
    return values


def _check(spec: MonitorSpec, key: str, ok: bool, message: str) -> None:
    if not ok:
        raise ConfigError(f"monitors.{spec.name}.{key}", message)


def build_plan(spec: MonitorSpec, quadrature: Optional[BallQuadrature] = None) -> MonitorPlan:
    """
    Resolve one monitor spec.

    Args:
        spec (MonitorSpec): The requested monitor.
        quadrature (BallQuadrature | None): Ball rule for the ball-based monitors.

    Returns:
        MonitorPlan: Evaluator and look-back.

    Raises:
        ConfigError: If a parameter is unknown, missing or out of range; the
            key is ``monitors.<name>.<parameter>``.
    """
    p = _resolve(spec)
    name = spec.name
    lookback = 0.0
    evaluator: Evaluator

    if name in _POINT_LIMITS:
        limit = _POINT_LIMITS[name]
        inside = 0.0 < p["r"] < limit if name == "thm12" else 0.0 < p["r"] <= limit
        _check(spec, "r", inside, f"distance from the axis must lie in (0, {limit}]")
        x = (p["r"], 0.0, p["z"])

    if name == "lambda":
        _check(spec, "A", 0.0 < p["A"] < p["B"], "must satisfy 0 < A < B")
        _check(spec, "S", p["S"] > 0.0, "must be > 0")
        _check(spec, "R", p["R"] > 0.0, "must be > 0")
        region = parabolic(p["A"], p["B"], p["S"], p["R"], p["z_center"])
        lookback = region.duration
        evaluator = lambda tr: monitors.lambda_report(tr, region)  # noqa: E731
    elif name in ("kbar", "oscillation"):
        _check(spec, "sigma", 5.0 / 9.0 < p["sigma"] < 10.0 / 9.0, "must lie in (5/9, 10/9)")
        _check(spec, "R", p["R"] > 0.0, "must be > 0")
        base = annular_cylinder(1.0, 4.0, p["R"], p["z_center"])
        sigma = p["sigma"]
        if name == "kbar":
            lookback = (sigma * p["R"]) ** 2
            evaluator = lambda tr: monitors.kbar_report(tr, sigma, base)  # noqa: E731
        else:
            evaluator = lambda tr: monitors.oscillation_check(  # noqa: E731
                tr.latest, sigma, base, tr.m0
            )
    elif name == "thm11":
        evaluator = lambda tr: monitors.thm11_monitor(tr.latest, x, tr.m0)  # noqa: E731
    elif name == "thm12":
        lookback = p["r"] ** 2
        evaluator = lambda tr: monitors.thm12_monitor(  # noqa: E731
            tr, x, quadrature=quadrature
        )
    elif name in ("thm12_region", "kbar_bound"):
        _check(spec, "k", p["k"] > 0.0, "must be > 0")
        k = p["k"]
        lookback = k * k
        monitor = (
            monitors.thm12_region_monitor
            if name == "thm12_region"
            else monitors.kbar_bound_monitor
        )
        evaluator = lambda tr: monitor(tr, k)  # noqa: E731
    elif name == "vz":
        evaluator = lambda tr: monitors.vz_report(tr.latest, tr.m0)  # noqa: E731
    elif name == "vz_stream":
        evaluator = lambda tr: monitors.vz_stream_check(tr.latest, tr.m0)  # noqa: E731
    elif name == "stream":
        evaluator = lambda tr: monitors.stream_monitor(tr.latest, x, tr.m0)  # noqa: E731
    elif name == "biot_savart":
        _check(spec, "p", p["p"] >= 1.0, "must be >= 1")
        exponent = p["p"]
        evaluator = lambda tr: monitors.biot_savart_monitor(  # noqa: E731
            tr.latest, x, exponent, tr.m0, quadrature
        )
    elif name == "energy":
        evaluator = monitors.energy_monitor
    else:
        evaluator = lambda tr: monitors.divergence_monitor(tr.latest, tr.m0)  # noqa: E731

    return MonitorPlan(spec=spec, lookback=lookback, evaluator=evaluator)


def build_plans(
    specs: list[MonitorSpec], quadrature: Optional[BallQuadrature] = None
) -> list[MonitorPlan]:
    quadrature = quadrature or BallQuadrature()
    return [build_plan(spec, quadrature) for spec in specs]


def required_retention(plans: list[MonitorPlan]) -> float:
    """The longest look-back among the plans, zero without plans."""
    return max((plan.lookback for plan in plans), default=0.0)


def check_retention(plans: list[MonitorPlan], retention: Optional[float]) -> None:
    """
    Fail fast when a monitor needs more history than the run retains.

    Raises:
        RetentionError: Naming the first monitor whose look-back exceeds
            ``retention``.
    """
    if retention is None:
        return
    for plan in plans:
        if plan.lookback > retention:
            raise RetentionError(plan.spec.label, plan.lookback, retention)


def evaluate_plans(plans: list[MonitorPlan], trajectory: Trajectory) -> list[BoundReport]:
    """Reports of every armed monitor at the latest snapshot, in plan order."""
    reports = []
    for plan in plans:
        report = plan.evaluate(trajectory)
        if report is not None:
            reports.append(report)
    return reports
