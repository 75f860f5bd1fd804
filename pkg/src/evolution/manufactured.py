"""
Manufactured solutions of the forced (Gamma, Omega) system.

Each family fixes closed-form Gamma* and L_theta*; everything else follows
symbolically:

    Omega* = -(Delta - 1/r^2) L_theta* / r
    v_r* = -d_z L_theta*,  v_z* = (1/r) d_r(r L_theta*)
    F_Gamma = d_t Gamma* - (Delta Gamma* - b.grad Gamma* - (2/r) d_r Gamma*)
    F_Omega = d_t Omega* - (Delta Omega* - b.grad Omega* + (2/r) d_r Omega*
              + (1/r^4) d_z (Gamma*)^2)

so the forced equations hold exactly. Expressions are differentiated once
with sympy and compiled with ``lambdify``.
"""

import logging
from functools import lru_cache
from typing import Callable

import numpy as np
import sympy

from src.errors import UnknownFamilyError
from src.fields import ScalarField
from src.geometry import Grid
from src.models import BaseModel

logger = logging.getLogger(__name__)

r, z, t = sympy.symbols("r z t", real=True)

NodeFunction = Callable[..., np.ndarray]

# Closed-form (Gamma*, L_theta*) per family.
FAMILIES: dict[str, tuple[sympy.Expr, sympy.Expr]] = {
    "swirl-free-stream": (sympy.Integer(0), r * sympy.sin(z) * sympy.exp(-t)),
    "rigid-swirl": (r**2, sympy.Integer(0)),
    "coupled": (r**2 * z * sympy.exp(-t), r * sympy.sin(z) * sympy.exp(-t)),
}


def _laplacian(f: sympy.Expr) -> sympy.Expr:
    return sympy.diff(f, r, 2) + sympy.diff(f, r) / r + sympy.diff(f, z, 2)


class ManufacturedSolution(BaseModel):
    """
    A compiled manufactured family.

    Attributes:
        tag: Family name.
        expressions: Symbolic Gamma, Omega, stream, v_r, v_z and the forcings.
        functions: The same expressions compiled to numpy functions of (r, z, t).
    """

    tag: str
    expressions: dict[str, sympy.Expr]
    functions: dict[str, NodeFunction]

    def evaluate(self, name: str, grid: Grid, time: float) -> np.ndarray:
        """Node values of one expression at a time, broadcast to the grid shape."""
        values = self.functions[name](grid.rr, grid.zz, time)
        return np.broadcast_to(np.asarray(values, dtype=float), grid.shape)

    def field(self, name: str, grid: Grid, time: float) -> ScalarField:
        return ScalarField.from_array(grid, self.evaluate(name, grid, time), name)


@lru_cache(maxsize=None)
def manufactured(tag: str) -> ManufacturedSolution:
    """
    Build a registered manufactured family.

    Args:
        tag (str): ``swirl-free-stream``, ``rigid-swirl`` or ``coupled``.

    Returns:
        ManufacturedSolution: Fields, velocity and forcing terms of the family.

    Raises:
        UnknownFamilyError: If the tag is not registered.
    """
    if tag not in FAMILIES:
        raise UnknownFamilyError(
            f"unknown manufactured family {tag!r}, expected one of {sorted(FAMILIES)}"
        )
    gamma, stream = FAMILIES[tag]
    omega = sympy.simplify(-(_laplacian(stream) - stream / r**2) / r)
    v_r = -sympy.diff(stream, z)
    v_z = sympy.diff(r * stream, r) / r

    def advection(f: sympy.Expr) -> sympy.Expr:
        return v_r * sympy.diff(f, r) + v_z * sympy.diff(f, z)

    rhs_gamma = _laplacian(gamma) - advection(gamma) - 2 * sympy.diff(gamma, r) / r
    rhs_omega = (
        _laplacian(omega)
        - advection(omega)
        + 2 * sympy.diff(omega, r) / r
        + sympy.diff(gamma**2, z) / r**4
    )
    expressions = {
        "gamma": gamma,
        "omega": omega,
        "stream": stream,
        "v_r": v_r,
        "v_z": v_z,
        "forcing_gamma": sympy.simplify(sympy.diff(gamma, t) - rhs_gamma),
        "forcing_omega": sympy.simplify(sympy.diff(omega, t) - rhs_omega),
    }
    functions = {
        name: sympy.lambdify((r, z, t), expression, modules="numpy")
        for name, expression in expressions.items()
    }
    logger.debug("Compiled manufactured family %s", tag)
    return ManufacturedSolution(tag=tag, expressions=expressions, functions=functions)
