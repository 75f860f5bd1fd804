"""Module for defining and validating Lebesgue exponents."""

import math
from typing import Annotated, Union

from pydantic import BeforeValidator


def validate_exponent(value: Union[str, float]) -> float:
    """Validate a Lebesgue exponent p in [1, inf].

    Args:
        value (Union[str, float]): The exponent, ``"inf"`` is accepted for infinity.

    Raises:
        ValueError: If the exponent is below 1 or not a number.

    Returns:
        float: The validated exponent.
    """
    try:
        p = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"{value} is an invalid exponent")
    if math.isnan(p) or p < 1.0:
        raise ValueError(f"{value} is an invalid exponent, must lie in [1, inf]")
    return p


# Exponent p with 1 <= p <= inf
Exponent = Annotated[float, BeforeValidator(validate_exponent)]
