"""Ratios of measured quantities to the structural side of a bound."""

import math


def implied_constant(lhs: float, rhs: float) -> float:
    """
    The constant C that makes lhs <= C * rhs tight.

    Args:
        lhs (float): Measured left-hand side, >= 0.
        rhs (float): Structural right-hand side with its constant set to 1.

    Returns:
        float: lhs / rhs; when rhs is zero, 0 if lhs is zero and inf otherwise.
    """
    if rhs > 0.0:
        return lhs / rhs
    return 0.0 if lhs == 0.0 else math.inf
