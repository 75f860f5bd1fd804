"""
Bound monitors.

Every monitor measures the left-hand side of an a priori bound on the flow,
evaluates its right-hand side with the unspecified constant set to 1 and
reports the implied constant. Norms over cylinders use the two dimensional
element dr dz where the bound is stated in the meridional plane (the K-bar
functional and the oscillation bound) and the volume element elsewhere.
"""

import logging
import math
from typing import Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid

from src.diagnostics.bound_report import BoundReport
from src.diagnostics.windows import spacetime_norm, window_integral, window_samples
from src.elliptic import BallQuadrature, biot_savart_report
from src.elliptic.ball_quadrature import Point
from src.errors import RegionError
from src.evolution import Trajectory
from src.fields import (
    FlowState,
    ScalarField,
    divergence_cyl,
    interpolate,
    norm,
    vector_norm,
)
from src.fields.norms import kinetic_energy
from src.geometry import Region, annular_cylinder, parabolic, region_mask, sigma_region
from src.utils.ratios import implied_constant

logger = logging.getLogger(__name__)

_E = math.e


def _axis_distance(x: Point, upper: float, inclusive: bool = True) -> float:
    r = math.hypot(x[0], x[1])
    inside = 0.0 < r <= upper if inclusive else 0.0 < r < upper
    if not inside:
        raise RegionError(f"point needs 0 < r {'<=' if inclusive else '<'} {upper}, got {r!r}")
    return r


def _at_point(f: ScalarField, x: Point) -> tuple[float, bool]:
    """Interpolated value at x, (0, True) when x lies off the grid."""
    value = float(interpolate(f, math.hypot(x[0], x[1]), x[2]))
    if math.isnan(value):
        logger.warning("Point %s lies outside the grid", x)
        return 0.0, True
    return value, False


def _state_at(trajectory: Trajectory, t: Optional[float]) -> FlowState:
    return trajectory.latest if t is None else trajectory.at(t)


def _point_label(x: Point) -> str:
    return f"x=({x[0]!r},{x[1]!r},{x[2]!r})"


def _region_label(region: Region) -> str:
    return f"{region.kind}(A={region.A!r},B={region.B!r},R={region.R!r},S={region.S!r})"


def _log_energy(v_norm: float, w_norm: float) -> float:
    """(||v|| + 1) log^{1/2}(||omega_theta|| + ||v|| + e)."""
    return (v_norm + 1.0) * math.sqrt(math.log(w_norm + v_norm + _E))


def _meridional(state: FlowState) -> list[np.ndarray]:
    return [state.v_r.values, state.v_z.values]


def _vorticity(state: FlowState) -> list[np.ndarray]:
    return [state.omega_theta.values]


# --- maximum principle ----------------------------------------------------


def lambda_report(
    trajectory: Trajectory, region: Optional[Region] = None, t: Optional[float] = None
) -> BoundReport:
    """
    Lambda, the sup of |v_theta| over a parabolic region, against the
    maximum principle bound |v_theta| <= M0 / r.

    Args:
        trajectory (Trajectory): Retained history.
        region (Region | None): Parabolic region, P_{1,4,1} by default.
        t (float | None): Window end, the latest snapshot by default.

    Returns:
        BoundReport: lhs Lambda, rhs M0 / inf r over the region; the implied
        constant is the ratio Lambda * inf r / M0.

    Raises:
        RetentionError: If the window is not retained.
    """
    region = region or parabolic(1.0, 4.0, 1.0)
    state = _state_at(trajectory, t)
    spatial = region.spatial()
    selected = region_mask(state.grid, spatial)
    r_inf = float(np.min(state.grid.rr[selected.mask]))

    def _sup(s: FlowState) -> float:
        return float(np.max(np.abs(s.v_theta.values[selected.mask])))

    window = region.time_window(state.t)
    _, values = window_samples(trajectory, *window, _sup, monitor="lambda")
    lam = float(np.max(values))
    rhs = trajectory.m0 / r_inf
    return BoundReport(
        monitor="lambda",
        location=_region_label(region),
        t=state.t,
        window=window,
        lhs=lam,
        rhs=rhs,
        rhs_terms={"m0": trajectory.m0, "r_inf": r_inf},
        implied_constant=implied_constant(lam, rhs),
        clipped=selected.clipped,
        m0=trajectory.m0,
    )


def lambda_sup(
    trajectory: Trajectory, region: Optional[Region] = None, t: Optional[float] = None
) -> float:
    """Lambda = ||v_theta||_{L^inf(region)} over the retained window."""
    return lambda_report(trajectory, region, t).lhs


# --- K-bar and the oscillation of r L_theta -------------------------------


def kbar_value(state: FlowState, sigma1: float = 1.0, base: Optional[Region] = None) -> float:
    """
    The K-bar functional at one time, over C(9 sigma1 / 8) with the 2D element.

    Args:
        state (FlowState): The flow.
        sigma1 (float): Scale parameter, 5/9 < sigma1 < 10/9.
        base (Region | None): Cylinder supplying R and z_center, C_{1,4} by default.

    Returns:
        float: (||v||_{L^2} + 1) log^{1/2}(||omega_theta||_{L^2} + ||v||_{L^2} + e).
    """
    base = base or annular_cylinder(1.0, 4.0)
    region = sigma_region(9.0 * sigma1 / 8.0, base.R, base.z_center, "area")
    v_norm = vector_norm([state.v_r, state.v_theta, state.v_z], region, 2.0)
    w_norm = norm(state.omega_theta, region, 2.0)
    return _log_energy(v_norm, w_norm)


def kbar(
    trajectory: Trajectory,
    sigma1: float = 1.0,
    base: Optional[Region] = None,
    t: Optional[float] = None,
) -> float:
    """
    K-bar: sup of ``kbar_value`` over the window (t - sigma1^2 R^2, t].

    Raises:
        RetentionError: If the window is not retained.
    """
    base = base or annular_cylinder(1.0, 4.0)
    t = trajectory.latest.t if t is None else t
    start = t - (sigma1 * base.R) ** 2
    _, values = window_samples(
        trajectory, start, t, lambda s: kbar_value(s, sigma1, base), monitor="kbar"
    )
    return float(np.max(values))


def kbar_report(
    trajectory: Trajectory,
    sigma1: float = 1.0,
    base: Optional[Region] = None,
    t: Optional[float] = None,
) -> BoundReport:
    base = base or annular_cylinder(1.0, 4.0)
    state = _state_at(trajectory, t)
    value = kbar(trajectory, sigma1, base, state.t)
    outer = sigma_region(9.0 * sigma1 / 8.0, base.R, base.z_center, "area")
    return BoundReport(
        monitor="kbar",
        location=f"sigma1={sigma1!r}",
        t=state.t,
        window=(state.t - (sigma1 * base.R) ** 2, state.t),
        lhs=value,
        rhs=1.0,
        implied_constant=value,
        clipped=region_mask(state.grid, outer).clipped,
        m0=trajectory.m0,
    )


def oscillation_check(
    state: FlowState, sigma1: float = 1.0, base: Optional[Region] = None, m0: float = 0.0
) -> BoundReport:
    """
    Oscillation of r L_theta on C(sigma1) against the K-bar type bound.

    The average a(t) of r L_theta is taken over C(9 sigma1 / 8) with the two
    dimensional element; the right-hand side is the K-bar expression at the
    same time.

    Args:
        state (FlowState): The flow.
        sigma1 (float): Scale parameter.
        base (Region | None): Cylinder supplying R and z_center.
        m0 (float): Recorded on the report.

    Returns:
        BoundReport: lhs sup |r L_theta - a| over C(sigma1).
    """
    base = base or annular_cylinder(1.0, 4.0)
    outer = sigma_region(9.0 * sigma1 / 8.0, base.R, base.z_center, "area")
    inner = sigma_region(sigma1, base.R, base.z_center, "area")
    grid = state.grid
    moment = grid.rr * state.stream.values
    outer_mask = region_mask(grid, outer)
    inner_mask = region_mask(grid, inner)
    average = outer_mask.integrate(moment) / outer_mask.measure
    lhs = float(np.max(np.abs(moment - average)[inner_mask.mask]))
    v_norm = vector_norm([state.v_r, state.v_theta, state.v_z], outer, 2.0)
    w_norm = norm(state.omega_theta, outer, 2.0)
    rhs = _log_energy(v_norm, w_norm)
    return BoundReport(
        monitor="oscillation",
        location=f"sigma1={sigma1!r}",
        t=state.t,
        lhs=lhs,
        rhs=rhs,
        rhs_terms={"average": average, "velocity_l2": v_norm, "vorticity_l2": w_norm},
        implied_constant=implied_constant(lhs, rhs),
        clipped=outer_mask.clipped or inner_mask.clipped,
        m0=m0,
    )


# --- pointwise bounds near the axis ---------------------------------------


def thm12_monitor(
    trajectory: Trajectory,
    x: Point,
    t: Optional[float] = None,
    quadrature: Optional[BallQuadrature] = None,
) -> BoundReport:
    """
    Pointwise angular vorticity bound at distance r < 1/2 from the axis:

        |omega_theta(x, t)| <= C ln(1/r) r^{-7/2}
            [sup_s (int_{B(x,4r)} v_r^2 + v_z^2)^{1/2} + r^{1/2}(M0 + 1)]^2
            [(int int_{[t-r^2,t] x B(x,4r)} omega_theta^2)^{1/2} + r^{1/2}(M0 + 1)]

    Ball integrals use the three dimensional ball quadrature; s ranges over
    [t - r^2, t].

    Args:
        trajectory (Trajectory): Retained history covering [t - r^2, t].
        x (Point): Cartesian evaluation point.
        t (float | None): Evaluation time, the latest snapshot by default.
        quadrature (BallQuadrature | None): Ball rule.

    Returns:
        BoundReport: With ``scale_free_constant`` = implied constant * ln(1/r),
        which is unchanged by the exact rescaling of the flow.

    Raises:
        RegionError: If r is not in (0, 1/2).
        RetentionError: If the window is not retained.
    """
    r = _axis_distance(x, 0.5, inclusive=False)
    quadrature = quadrature or BallQuadrature()
    state = _state_at(trajectory, t)
    lhs, clipped = _at_point(state.omega_theta, x)
    lhs = abs(lhs)
    radius = 4.0 * r
    flags: list[bool] = []

    def _ball_energy(s: FlowState) -> float:
        value, clip = quadrature.lp_norm(_meridional(s), s.grid, x, radius, 2.0)
        flags.append(clip)
        return value**2

    def _ball_enstrophy(s: FlowState) -> float:
        value, clip = quadrature.lp_norm(_vorticity(s), s.grid, x, radius, 2.0)
        flags.append(clip)
        return value**2

    window = (state.t - r * r, state.t)
    _, energies = window_samples(trajectory, *window, _ball_energy, monitor="thm12")
    times, enstrophies = window_samples(
        trajectory, *window, _ball_enstrophy, monitor="thm12"
    )
    velocity_term = math.sqrt(float(np.max(energies)))
    vorticity_term = math.sqrt(window_integral(times, enstrophies))
    floor = math.sqrt(r) * (trajectory.m0 + 1.0)
    log_factor = math.log(1.0 / r)
    scale_free_rhs = r**-3.5 * (velocity_term + floor) ** 2 * (vorticity_term + floor)
    rhs = log_factor * scale_free_rhs
    clipped = clipped or any(flags)
    return BoundReport(
        monitor="thm12",
        location=_point_label(x),
        t=state.t,
        window=window,
        lhs=lhs,
        rhs=rhs,
        rhs_terms={
            "log_factor": log_factor,
            "velocity_term": velocity_term,
            "vorticity_term": vorticity_term,
            "floor": floor,
        },
        implied_constant=implied_constant(lhs, rhs),
        scale_free_constant=implied_constant(lhs, scale_free_rhs),
        clipped=clipped,
        m0=trajectory.m0,
    )


def thm11_monitor(state: FlowState, x: Point, m0: float = 0.0) -> BoundReport:
    """
    Meridional velocity bound |v_r| + |v_z| <= C |ln r|^{1/2} / r^2 for 0 < r <= 1/2.

    Raises:
        RegionError: If r is not in (0, 1/2].
    """
    r = _axis_distance(x, 0.5)
    v_r, clip_r = _at_point(state.v_r, x)
    v_z, clip_z = _at_point(state.v_z, x)
    lhs = abs(v_r) + abs(v_z)
    log_factor = math.sqrt(abs(math.log(r)))
    rhs = log_factor / r**2
    return BoundReport(
        monitor="thm11",
        location=_point_label(x),
        t=state.t,
        lhs=lhs,
        rhs=rhs,
        rhs_terms={"log_factor": log_factor},
        implied_constant=implied_constant(lhs, rhs),
        scale_free_constant=lhs * r**2,
        clipped=clip_r or clip_z,
        m0=m0,
    )


def stream_monitor(state: FlowState, x: Point, m0: float = 0.0) -> BoundReport:
    """
    Stream function bound |L_theta| <= C |ln r|^{1/2} / r^{1/2} for 0 < r <= 1/2.

    L_theta is unchanged by the rescaling while the bound is not, up to the
    log factor; ``scale_free_constant`` = |L_theta| r^{1/2} is reported for it.

    Raises:
        RegionError: If r is not in (0, 1/2].
    """
    r = _axis_distance(x, 0.5)
    value, clipped = _at_point(state.stream, x)
    lhs = abs(value)
    log_factor = math.sqrt(abs(math.log(r)))
    rhs = log_factor / math.sqrt(r)
    return BoundReport(
        monitor="stream",
        location=_point_label(x),
        t=state.t,
        lhs=lhs,
        rhs=rhs,
        rhs_terms={"log_factor": log_factor},
        implied_constant=implied_constant(lhs, rhs),
        scale_free_constant=lhs * math.sqrt(r),
        clipped=clipped,
        m0=m0,
    )


def biot_savart_monitor(
    state: FlowState,
    x: Point,
    p: float = 2.0,
    m0: float = 0.0,
    quadrature: Optional[BallQuadrature] = None,
) -> BoundReport:
    report = biot_savart_report(state, x, p, quadrature)
    return BoundReport(
        monitor="biot_savart",
        location=_point_label(x),
        t=state.t,
        lhs=report.lhs_sup_b,
        rhs=report.term_lp + report.term_vort,
        rhs_terms={
            "r0": report.r0,
            "term_lp": report.term_lp,
            "term_vort": report.term_vort,
            "n_balls": float(report.n_balls),
            "ring_energy_ratio": report.ring_energy_ratio,
            "ring_factor": report.ring_factor,
        },
        implied_constant=report.implied_constant,
        clipped=report.clipped,
        m0=m0,
    )


# --- axial velocity criteria ----------------------------------------------


def vz_criterion(state: FlowState) -> float:
    """sup r |v_z| over the grid, the smallest C with |v_z| <= C / r now."""
    return float(np.max(state.grid.rr * np.abs(state.v_z.values)))


def vz_report(state: FlowState, m0: float = 0.0) -> BoundReport:
    value = vz_criterion(state)
    return BoundReport(
        monitor="vz",
        location="grid",
        t=state.t,
        lhs=value,
        rhs=1.0,
        implied_constant=value,
        m0=m0,
    )


def vz_stream_check(state: FlowState, m0: float = 0.0) -> BoundReport:
    """
    The identity d_r(r L_theta) = r v_z integrated from r_min:

        |r L_theta(r, z) - r_min L_theta(r_min, z)| <= int_{r_min}^{r_max} r |v_z| dr

    Returns:
        BoundReport: Implied constant at most 1 + O(h^2).
    """
    grid = state.grid
    moment = grid.rr * state.stream.values
    change = moment - moment[:1, :]
    lhs = float(np.max(np.abs(change)))
    flux = cumulative_trapezoid(grid.rr * state.v_z.values, grid.r, axis=0, initial=0.0)
    bound = cumulative_trapezoid(
        grid.rr * np.abs(state.v_z.values), grid.r, axis=0, initial=0.0
    )
    rhs = float(np.max(bound[-1, :]))
    residual = float(np.max(np.abs(change - flux)))
    return BoundReport(
        monitor="vz_stream",
        location="grid",
        t=state.t,
        lhs=lhs,
        rhs=rhs,
        rhs_terms={"identity_residual": residual},
        implied_constant=implied_constant(lhs, rhs),
        m0=m0,
    )


# --- scale-k region bounds ------------------------------------------------


def thm12_region_monitor(
    trajectory: Trajectory, k: float, t: Optional[float] = None
) -> BoundReport:
    """
    Region form of the angular vorticity bound at scale k:

        ||omega_theta||_{L^inf(P_{2k,3k,3k/4})} <= C k^{-7/2}
            (||b||_{L^inf L^2(P_{k,4k,k})} log^{1/2}(1/k + e) + k^{1/2} M0 + k^{1/2})^2
            (||omega_theta||_{L^2(P_{k,4k,k})} + k^{1/2} M0)

    Raises:
        RetentionError: If the window (t - k^2, t] is not retained.
    """
    state = _state_at(trajectory, t)
    m0 = trajectory.m0
    inner = parabolic(2.0, 3.0, 0.75, R=k)
    outer = parabolic(1.0, 4.0, 1.0, R=k)
    inner_mask = region_mask(state.grid, inner.spatial())
    outer_mask = region_mask(state.grid, outer.spatial())

    def _sup_vorticity(s: FlowState) -> float:
        return float(np.max(np.abs(s.omega_theta.values[inner_mask.mask])))

    _, sups = window_samples(
        trajectory, *inner.time_window(state.t), _sup_vorticity, monitor="thm12_region"
    )
    lhs = float(np.max(sups))
    b_norm = float(
        np.max(
            window_samples(
                trajectory,
                *outer.time_window(state.t),
                lambda s: vector_norm([s.v_r, s.v_z], outer.spatial(), 2.0),
                monitor="thm12_region",
            )[1]
        )
    )
    w_norm = spacetime_norm(trajectory, _vorticity, outer, 2.0, state.t)
    log_factor = math.sqrt(math.log(1.0 / k + _E))
    root_k = math.sqrt(k)

    def _rhs(log_weight: float) -> float:
        first = b_norm * log_weight + root_k * m0 + root_k
        return k**-3.5 * first**2 * (w_norm + root_k * m0)

    rhs = _rhs(log_factor)
    return BoundReport(
        monitor="thm12_region",
        location=f"k={k!r}",
        t=state.t,
        window=outer.time_window(state.t),
        lhs=lhs,
        rhs=rhs,
        rhs_terms={"b_linf_l2": b_norm, "omega_l2": w_norm, "log_factor": log_factor},
        implied_constant=implied_constant(lhs, rhs),
        scale_free_constant=implied_constant(lhs, _rhs(1.0)),
        clipped=inner_mask.clipped or outer_mask.clipped,
        m0=m0,
    )


def kbar_bound_monitor(
    trajectory: Trajectory, k: float, t: Optional[float] = None
) -> BoundReport:
    """
    K-bar of the flow rescaled by k (sigma1 = 1) against
    (k^{-1/2} ||b||_{L^inf L^2(P_{k,4k,k})} + 1) log^{1/2}(1/k + e).

    In original variables the rescaled K-bar reads
    sup over (t - k^2, t] of (||v||_{L^2} + 1) log^{1/2}(k ||omega_theta||_{L^2} + ||v||_{L^2} + e)
    with two dimensional norms over k C(9/8).

    Raises:
        RetentionError: If the window (t - k^2, t] is not retained.
    """
    state = _state_at(trajectory, t)
    region = sigma_region(9.0 / 8.0, k, 0.0, "area")
    outer = parabolic(1.0, 4.0, 1.0, R=k)
    window = outer.time_window(state.t)

    def _rescaled_kbar(s: FlowState) -> float:
        v_norm = vector_norm([s.v_r, s.v_theta, s.v_z], region, 2.0)
        w_norm = norm(s.omega_theta, region, 2.0)
        return _log_energy(v_norm, k * w_norm)

    _, values = window_samples(trajectory, *window, _rescaled_kbar, monitor="kbar_bound")
    _, b_norms = window_samples(
        trajectory,
        *window,
        lambda s: vector_norm([s.v_r, s.v_z], outer.spatial(), 2.0),
        monitor="kbar_bound",
    )
    lhs = float(np.max(values))
    b_norm = float(np.max(b_norms))
    log_factor = math.sqrt(math.log(1.0 / k + _E))
    rhs = (b_norm / math.sqrt(k) + 1.0) * log_factor
    return BoundReport(
        monitor="kbar_bound",
        location=f"k={k!r}",
        t=state.t,
        window=window,
        lhs=lhs,
        rhs=rhs,
        rhs_terms={"b_linf_l2": b_norm, "log_factor": log_factor},
        implied_constant=implied_constant(lhs, rhs),
        clipped=region_mask(state.grid, region).clipped
        or region_mask(state.grid, outer.spatial()).clipped,
        m0=trajectory.m0,
    )


# --- conservation checks --------------------------------------------------


def energy_monitor(trajectory: Trajectory, t: Optional[float] = None) -> BoundReport:
    """Kinetic energy against the energy of the previous retained snapshot."""
    state = _state_at(trajectory, t)
    energy = kinetic_energy(state)
    earlier = [s for s in trajectory if s.t < state.t]
    previous = kinetic_energy(earlier[-1]) if earlier else energy
    return BoundReport(
        monitor="energy",
        location="grid",
        t=state.t,
        lhs=energy,
        rhs=previous,
        implied_constant=implied_constant(energy, previous),
        m0=trajectory.m0,
    )


def divergence_monitor(state: FlowState, m0: float = 0.0) -> BoundReport:
    """max |div b| against max |b|; vanishes to round-off."""
    divergence = float(np.max(np.abs(divergence_cyl(state.v_r, state.v_z).values)))
    speed = float(np.max(state.meridional_speed()))
    return BoundReport(
        monitor="divergence",
        location="grid",
        t=state.t,
        lhs=divergence,
        rhs=speed,
        implied_constant=implied_constant(divergence, speed),
        m0=m0,
    )
