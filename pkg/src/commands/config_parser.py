"""
Run configuration text.

Sections ``[grid]``, ``[initial]``, ``[run]`` and ``[monitors]`` hold one
``key = value`` per line. The ``monitor`` key of ``[monitors]`` takes one
monitor per continuation line, written ``name @ key=value,key=value``:

    [monitors]
    monitor =
        thm12 @ r=0.4,z=0
        lambda

Unknown sections and keys are errors, and every error names its key.
"""

import configparser
import re
from typing import Iterable, Optional

from pydantic import ValidationError

from src.errors import ConfigError
from src.evolution import InitialConditionSpec, MonitorSpec, RunConfig
from src.geometry import Grid

SECTIONS = ("grid", "initial", "run", "monitors")
_MONITOR_KEY = "monitor"
_SPEC_SEPARATOR = re.compile(r"[\n;]")


def _first_error(e: ValidationError) -> tuple[tuple[str, ...], str]:
    error = e.errors()[0]
    return tuple(str(part) for part in error["loc"]), str(error["msg"])


def _grid_key(loc: tuple[str, ...], message: str) -> str:
    """Key of a grid error; whole-model errors name the first grid field they mention."""
    if loc:
        return f"grid.{loc[0]}"
    for word in re.findall(r"[a-z_]+", message):
        if word in Grid.model_fields:
            return f"grid.{word}"
    return "grid"


def _number(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(key, f"expected a number, got {value!r}") from None


def parse_monitor_spec(text: str) -> MonitorSpec:
    """
    Parse one ``name @ key=value,...`` monitor spec.

    Raises:
        ConfigError: If the name is unknown or a parameter is malformed.
    """
    name, _, arguments = (part.strip() for part in text.partition("@"))
    params: dict[str, float] = {}
    for argument in filter(None, (a.strip() for a in arguments.split(","))):
        key, separator, value = (part.strip() for part in argument.partition("="))
        if not separator or not key:
            raise ConfigError(f"monitors.{name}", f"malformed parameter {argument!r}")
        params[key] = _number(f"monitors.{name}.{key}", value)
    try:
        return MonitorSpec(name=name, params=params)
    except ValidationError as e:
        _, message = _first_error(e)
        raise ConfigError(f"monitors.{name or _MONITOR_KEY}", message) from e


def parse_monitor_specs(text: str) -> list[MonitorSpec]:
    """Monitor specs separated by newlines or semicolons."""
    return [
        parse_monitor_spec(line)
        for line in (part.strip() for part in _SPEC_SEPARATOR.split(text))
        if line
    ]


def _apply_overrides(parser: configparser.ConfigParser, overrides: Iterable[str]) -> None:
    for override in overrides:
        target, separator, value = override.partition("=")
        section, dot, key = target.strip().partition(".")
        if not separator or not dot or not key:
            raise ConfigError(override, "override must read section.key=value")
        if not parser.has_section(section):
            parser.add_section(section)
        parser.set(section, key.strip(), value.strip())


def _section(parser: configparser.ConfigParser, name: str) -> dict[str, str]:
    if not parser.has_section(name):
        return {}
    return dict(parser.items(name))


def parse_config(text: str, overrides: Optional[Iterable[str]] = None) -> RunConfig:
    """
    Parse and validate run configuration text.

    Args:
        text (str): The configuration.
        overrides (Iterable[str] | None): ``section.key=value`` assignments
            applied on top of the text.

    Returns:
        RunConfig: The validated configuration with defaults filled in.

    Raises:
        ConfigError: On syntax errors, unknown sections or keys, missing
            required keys, type mismatches and violated invariants; the
            error's ``key`` is ``section.key``.
    """
    parser = configparser.ConfigParser(
        strict=True, interpolation=None, inline_comment_prefixes=("#",)
    )
    parser.optionxform = str  # type: ignore[assignment,method-assign]
    try:
        parser.read_string(text)
    except configparser.Error as e:
        raise ConfigError("config", str(e).splitlines()[0]) from e
    _apply_overrides(parser, overrides or ())

    for section in parser.sections():
        if section not in SECTIONS:
            raise ConfigError(section, f"unknown section, expected one of {list(SECTIONS)}")
    if not parser.has_section("grid"):
        raise ConfigError("grid", "missing section")

    try:
        grid = Grid.model_validate(_section(parser, "grid"))
    except ValidationError as e:
        loc, message = _first_error(e)
        raise ConfigError(_grid_key(loc, message), message) from e

    initial_raw = _section(parser, "initial")
    family = initial_raw.pop("family", "zero")
    params = {key: _number(f"initial.{key}", value) for key, value in initial_raw.items()}
    try:
        initial = InitialConditionSpec(family=family, params=params)
    except ValidationError as e:
        loc, message = _first_error(e)
        raise ConfigError(f"initial.{loc[0] if loc else 'family'}", message) from e

    monitors_raw = _section(parser, "monitors")
    specs = parse_monitor_specs(monitors_raw.pop(_MONITOR_KEY, ""))
    for key in monitors_raw:
        raise ConfigError(f"monitors.{key}", "unknown key, expected monitor")

    run = _section(parser, "run")
    for reserved in ("grid", "initial", "monitors"):
        if reserved in run:
            raise ConfigError(f"run.{reserved}", "set in its own section")
    try:
        return RunConfig.model_validate(
            {**run, "grid": grid, "initial": initial, "monitors": specs}
        )
    except ValidationError as e:
        loc, message = _first_error(e)
        raise ConfigError(f"run.{loc[0]}" if loc else "run", message) from e
