"""
The exact rescaling of the equations and its norm identities.

For k > 0 the rescaled flow v~(x, t) = k v(kx, k^2 t) is again a solution,
with Gamma~ = Gamma, L_theta~ = L_theta, Omega~ = k^3 Omega and
omega~ = k^2 omega. On a grid whose coordinates are divided by a power of
two the rescaled fields are exact multiples of the stored ones, so every
norm identity below holds to round-off.
"""

import logging
import math
from typing import Callable, Optional, Union

import numpy as np

from src.diagnostics.windows import spacetime_norm, window_samples
from src.elliptic import derive
from src.errors import ScalingError
from src.evolution import Trajectory
from src.fields import FlowState, ScalarField, curl_r, curl_z, vector_norm
from src.geometry import Grid, Region, parabolic, region_mask, scale_region
from src.models import BaseModel
from src.utils.types.NestedScale import validate_nested_scale

logger = logging.getLogger(__name__)

Components = Callable[[FlowState], list[np.ndarray]]


class ScalingIdentity(BaseModel):
    """
    One norm identity of the rescaling.

    Attributes:
        name: Identity name.
        expected_factor: Power of k the identity predicts.
        ratio: Rescaled norm over the original norm.
        relative_error: |ratio / expected_factor - 1|.
    """

    name: str
    expected_factor: float
    ratio: float
    relative_error: float


def nested_scale(k: float) -> float:
    """
    Validate a rescaling factor.

    Raises:
        ScalingError: If k is not a positive power of two.
    """
    try:
        return validate_nested_scale(k)
    except ValueError as e:
        raise ScalingError(str(e)) from e


def _scaled_field(f: ScalarField, grid: Grid, factor: float) -> ScalarField:
    return ScalarField.from_array(grid, factor * f.values, f.name)


def rescale_state(state: FlowState, k: float) -> FlowState:
    """
    The state of the rescaled flow at time t / k^2 on the grid divided by k.

    Args:
        state (FlowState): Original state.
        k (float): Power-of-two scale factor.

    Returns:
        FlowState: Gamma and L_theta unchanged, Omega multiplied by k^3,
        the derived fields recomputed on the rescaled grid.

    Raises:
        ScalingError: If k is not a power of two.
    """
    k = nested_scale(k)
    grid = state.grid.scaled(k)
    return derive(
        state.t / k**2,
        _scaled_field(state.gamma, grid, 1.0),
        _scaled_field(state.omega, grid, k**3),
        _scaled_field(state.stream, grid, 1.0),
        derived_fresh=state.derived_fresh,
    )


def rescale_trajectory(trajectory: Trajectory, k: float) -> Trajectory:
    """Rescale every retained snapshot; times, t0 and retention divide by k^2."""
    k = nested_scale(k)
    retention = None if trajectory.retention is None else trajectory.retention / k**2
    rescaled = Trajectory(retention, trajectory.t0 / k**2, trajectory.m0)
    for state in trajectory:
        rescaled.append(rescale_state(state, k))
    return rescaled


def _velocity(state: FlowState) -> list[np.ndarray]:
    return [state.v_r.values, state.v_theta.values, state.v_z.values]


def _vorticity(state: FlowState) -> list[np.ndarray]:
    return [
        curl_r(state.v_theta).values,
        state.omega_theta.values,
        curl_z(state.v_theta).values,
    ]


def _spatial_norm(state: FlowState, components: Components, region: Region) -> float:
    selected = region_mask(state.grid, region)
    magnitude2 = sum(c**2 for c in components(state))
    return float(np.sqrt(np.sum(selected.weights * magnitude2)))


def _meridional_sup(
    trajectory: Trajectory, region: Region, t: float, frozen: bool
) -> float:
    spatial = region.spatial()

    def _norm(state: FlowState) -> float:
        return vector_norm([state.v_r, state.v_z], spatial, 2.0)

    if frozen:
        return _norm(trajectory.at(t))
    _, values = window_samples(
        trajectory, *region.time_window(t), _norm, monitor="scaling_check"
    )
    return float(np.max(values))


def _identity(name: str, expected: float, original: float, rescaled: float) -> ScalingIdentity:
    if original == 0.0:
        ratio = expected if rescaled == 0.0 else math.inf
    else:
        ratio = rescaled / original
    return ScalingIdentity(
        name=name,
        expected_factor=expected,
        ratio=ratio,
        relative_error=abs(ratio / expected - 1.0),
    )


def scaling_check(
    source: Union[FlowState, Trajectory],
    k: float,
    region: Optional[Region] = None,
    t: Optional[float] = None,
) -> list[ScalingIdentity]:
    """
    Verify the norm identities of the rescaling by k.

    ``region`` is given in the original variables, so the rescaled norms are
    taken over the region divided by k. Space-time norms over a single state
    treat it as frozen over the region's time window.

    Args:
        source (FlowState | Trajectory): A snapshot or a retained history.
        k (float): Power-of-two scale factor.
        region (Region | None): Parabolic region, P_{1,4,1} by default.
        t (float | None): Window end, the latest snapshot by default.

    Returns:
        list[ScalingIdentity]: Velocity and vorticity space-time L^2 norms,
        the meridional L^inf L^2 norm, spatial velocity and vorticity L^2
        norms and the invariance of Gamma.

    Raises:
        ScalingError: If k is not a power of two.
        RetentionError: If a trajectory does not retain the window.
    """
    k = nested_scale(k)
    region = region or parabolic(1.0, 4.0, 1.0)
    frozen = isinstance(source, FlowState)
    original = Trajectory.start(source) if frozen else source
    t = original.latest.t if t is None else t
    rescaled = rescale_trajectory(original, k)
    t_rescaled = t / k**2
    small = scale_region(region, 1.0 / k)
    state = original.at(t)
    state_rescaled = rescaled.at(t_rescaled)
    spatial, spatial_small = region.spatial(), small.spatial()

    identities = [
        _identity(
            "velocity_l2_spacetime",
            k**-1.5,
            spacetime_norm(original, _velocity, region, 2.0, t, frozen),
            spacetime_norm(rescaled, _velocity, small, 2.0, t_rescaled, frozen),
        ),
        _identity(
            "meridional_linf_l2",
            k**-0.5,
            _meridional_sup(original, region, t, frozen),
            _meridional_sup(rescaled, small, t_rescaled, frozen),
        ),
        _identity(
            "vorticity_l2_spacetime",
            k**-0.5,
            spacetime_norm(original, _vorticity, region, 2.0, t, frozen),
            spacetime_norm(rescaled, _vorticity, small, 2.0, t_rescaled, frozen),
        ),
        _identity(
            "velocity_l2",
            k**-0.5,
            _spatial_norm(state, _velocity, spatial),
            _spatial_norm(state_rescaled, _velocity, spatial_small),
        ),
        _identity(
            "vorticity_l2",
            k**0.5,
            _spatial_norm(state, _vorticity, spatial),
            _spatial_norm(state_rescaled, _vorticity, spatial_small),
        ),
    ]

    gamma_scale = state.gamma.max_abs()
    gamma_error = float(np.max(np.abs(state_rescaled.gamma.values - state.gamma.values)))
    identities.append(
        ScalingIdentity(
            name="gamma_invariance",
            expected_factor=1.0,
            ratio=state_rescaled.gamma.max_abs() / gamma_scale if gamma_scale else 1.0,
            relative_error=gamma_error / gamma_scale if gamma_scale else gamma_error,
        )
    )
    worst = max(identity.relative_error for identity in identities)
    logger.info("Scaling check k=%r: largest relative error %.3e", k, worst)
    return identities
