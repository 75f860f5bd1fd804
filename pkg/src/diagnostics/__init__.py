from .bound_report import BoundReport
from .monitors import (
    biot_savart_monitor,
    divergence_monitor,
    energy_monitor,
    kbar,
    kbar_bound_monitor,
    kbar_report,
    kbar_value,
    lambda_report,
    lambda_sup,
    oscillation_check,
    stream_monitor,
    thm11_monitor,
    thm12_monitor,
    thm12_region_monitor,
    vz_criterion,
    vz_report,
    vz_stream_check,
)
from .registry import (
    MonitorPlan,
    build_plan,
    build_plans,
    check_retention,
    evaluate_plans,
    required_retention,
)
from .scaling import (
    ScalingIdentity,
    nested_scale,
    rescale_state,
    rescale_trajectory,
    scaling_check,
)
from .windows import spacetime_norm, window_integral, window_samples

__all__ = [
    "BoundReport",
    "MonitorPlan",
    "ScalingIdentity",
    "biot_savart_monitor",
    "build_plan",
    "build_plans",
    "check_retention",
    "divergence_monitor",
    "energy_monitor",
    "evaluate_plans",
    "kbar",
    "kbar_bound_monitor",
    "kbar_report",
    "kbar_value",
    "lambda_report",
    "lambda_sup",
    "nested_scale",
    "oscillation_check",
    "required_retention",
    "rescale_state",
    "rescale_trajectory",
    "scaling_check",
    "spacetime_norm",
    "stream_monitor",
    "thm11_monitor",
    "thm12_monitor",
    "thm12_region_monitor",
    "vz_criterion",
    "vz_report",
    "vz_stream_check",
    "window_integral",
    "window_samples",
]
