"""
Rescaling factors that map grid nodes exactly onto grid nodes.
"""

import math
from typing import Annotated

from pydantic.functional_validators import BeforeValidator


def validate_nested_scale(value: float) -> float:
    """
    Validate that k is an exact power of two.

    Dividing coordinates by a power of two is exact in binary floating
    point, so the rescaled grid is nested in the original one node for node.

    Args:
        value (float): The scale factor k.

    Returns:
        float: The validated scale factor.

    Raises:
        ValueError: If k is not a positive power of two.
    """
    k = float(value)
    if not math.isfinite(k) or k <= 0.0:
        raise ValueError(f"{value} is an invalid scale, must be > 0")
    mantissa, _ = math.frexp(k)
    if mantissa != 0.5:
        raise ValueError(f"{value} is not a nested scale, must be a power of two")
    return k


NestedScale = Annotated[float, BeforeValidator(validate_nested_scale)]
