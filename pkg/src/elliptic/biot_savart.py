"""
Localized Biot-Savart estimate near the symmetry axis.

For a point x at distance r from the axis and r0 = r^{3/2} |ln r|^{-1/2},

    sup_{B(x, r0)} |b| <= C r0^{-3/p} ||b||_{L^p(B(x, 2 r0))} + C r0 sup_{B(x, 2 r0)} |omega_theta|.

Both sides are evaluated directly from the fields. The covering of the circle
through x by about r / (2 r0) such balls, all inside the solid torus of
cross-section radius r, is reported through the energy fields.
"""

import logging
import math
from typing import Optional

import numpy as np

from src.elliptic.ball_quadrature import BallQuadrature, Point
from src.errors import RegionError
from src.fields import FlowState
from src.geometry import ball, grid_weights, region_mask
from src.models import BaseModel
from src.utils.ratios import implied_constant

logger = logging.getLogger(__name__)


class BiotSavartReport(BaseModel):
    """
    Both sides of the localized Biot-Savart inequality at one point.

    Attributes:
        r: Distance of x from the axis.
        r0: Ball radius r^{3/2} |ln r|^{-1/2}.
        p: Lebesgue exponent.
        lhs_sup_b: sup of |b| over B(x, r0).
        term_lp: r0^{-3/p} ||b||_{L^p(B(x, 2 r0))}.
        term_vort: r0 sup of |omega_theta| over B(x, 2 r0).
        implied_constant: lhs_sup_b / (term_lp + term_vort).
        n_balls: ceil(r / (2 r0)), balls needed to cover the circle through x.
        ball_energy: ||b||^2_{L^2(B(x, 2 r0))}.
        ring_energy_ratio: ball_energy over the kinetic energy of b on the grid.
        ring_factor: r^{1/2} |ln r|^{-1/2}, the ratio the covering argument predicts.
        torus_energy: ||b||^2_{L^2} over the solid torus of cross-section r about x.
        clipped: A ball left the grid; constants are then lower bounds.
    """

    r: float
    r0: float
    p: float
    lhs_sup_b: float
    term_lp: float
    term_vort: float
    implied_constant: float
    n_balls: int
    ball_energy: float
    ring_energy_ratio: float
    ring_factor: float
    torus_energy: float
    clipped: bool


def ball_radius(r: float) -> float:
    """r0 = r^{3/2} |ln r|^{-1/2}."""
    return r**1.5 / math.sqrt(abs(math.log(r)))


def biot_savart_report(
    state: FlowState,
    x: Point,
    p: float = 2.0,
    quadrature: Optional[BallQuadrature] = None,
) -> BiotSavartReport:
    """
    Evaluate the localized Biot-Savart inequality at x.

    Args:
        state (FlowState): The flow.
        x (Point): Cartesian point (x1, x2, x3).
        p (float): Exponent in [1, inf].
        quadrature (BallQuadrature | None): Ball rule, default resolution if omitted.

    Returns:
        BiotSavartReport: Both sides, the implied constant and the covering data.

    Raises:
        RegionError: If the distance r of x from the axis is not in (0, 1/2].
    """
    r = math.hypot(x[0], x[1])
    if not 0.0 < r <= 0.5:
        raise RegionError(f"Biot-Savart point needs 0 < r <= 1/2, got r={r!r}")
    quadrature = quadrature or BallQuadrature()
    grid = state.grid
    b = (state.v_r.values, state.v_z.values)
    r0 = ball_radius(r)

    lhs, clipped_inner = quadrature.sup(b, grid, x, r0)
    b_norm, clipped_lp = quadrature.lp_norm(b, grid, x, 2.0 * r0, p)
    vort_sup, clipped_vort = quadrature.sup(
        (state.omega_theta.values,), grid, x, 2.0 * r0
    )
    term_lp = b_norm if math.isinf(p) else r0 ** (-3.0 / p) * b_norm
    term_vort = r0 * vort_sup

    ball_l2, _ = quadrature.lp_norm(b, grid, x, 2.0 * r0, 2.0)
    ball_energy = ball_l2**2
    meridional2 = state.v_r.values**2 + state.v_z.values**2
    grid_energy = float(np.sum(grid_weights(grid, "volume") * meridional2))
    ring_energy_ratio = ball_energy / grid_energy if grid_energy > 0.0 else 0.0
    torus = region_mask(grid, ball(x, r, "volume"))

    clipped = clipped_inner or clipped_lp or clipped_vort
    if clipped:
        logger.warning("Biot-Savart balls around x=%s leave the grid", x)
    return BiotSavartReport(
        r=r,
        r0=r0,
        p=p,
        lhs_sup_b=lhs,
        term_lp=term_lp,
        term_vort=term_vort,
        implied_constant=implied_constant(lhs, term_lp + term_vort),
        n_balls=math.ceil(r / (2.0 * r0)),
        ball_energy=ball_energy,
        ring_energy_ratio=ring_energy_ratio,
        ring_factor=math.sqrt(r) / math.sqrt(abs(math.log(r))),
        torus_energy=torus.integrate(meridional2),
        clipped=clipped,
    )
