"""Module for validating strictly positive, finite lengths."""

import math
from typing import Annotated

from pydantic import BeforeValidator


def validate_positive_length(value: float) -> float:
    """
    Validate that a length is finite and strictly positive.

    Args:
        value (float): The length to validate.

    Returns:
        float: The validated length.

    Raises:
        ValueError: If the length is non-positive or not finite.
    """
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{value} is an invalid length, must be finite and > 0")
    return value


PositiveLength = Annotated[float, BeforeValidator(validate_positive_length)]
