"""Module for validating CFL safety factors."""

from typing import Annotated

from pydantic import BeforeValidator


def validate_cfl_factor(value: float) -> float:
    """Validate that a CFL factor lies strictly between 0 and 1.

    Args:
        value (float): The factor to validate.

    Raises:
        ValueError: If the factor is outside (0, 1).

    Returns:
        float: The validated factor.
    """
    value = float(value)
    if not 0.0 < value < 1.0:
        raise ValueError(f"{value} is an invalid CFL factor, must lie in (0, 1)")
    return value


CflFactor = Annotated[float, BeforeValidator(validate_cfl_factor)]
