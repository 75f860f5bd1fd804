from .config_parser import parse_config, parse_monitor_spec, parse_monitor_specs
from .mms_verify import cmd_mms_verify, convergence_study, observed_order
from .monitor import cmd_monitor, replay
from .run import cmd_run, execute, read_config
from .scale_check import cmd_scale_check, load_trajectory

__all__ = [
    "cmd_mms_verify",
    "cmd_monitor",
    "cmd_run",
    "cmd_scale_check",
    "convergence_study",
    "execute",
    "load_trajectory",
    "observed_order",
    "parse_config",
    "parse_monitor_spec",
    "parse_monitor_specs",
    "read_config",
    "replay",
]
