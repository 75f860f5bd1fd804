"""
Module for valid default parameters of grids, runs and monitors.
"""

from pydantic import BaseModel as PydanticBaseModel
from pydantic import PositiveFloat, PositiveInt

from src.utils.types import CflFactor, PositiveLength


class ValidItems(PydanticBaseModel):
    """
    ValidItems model representing validated parameter values.
    """

    r_min: PositiveLength = 0.5
    r_max: PositiveLength = 4.5
    z_extent: PositiveLength = 4.5
    n_small: PositiveInt = 9
    n_r: PositiveInt = 33
    n_z: PositiveInt = 73
    t_end: PositiveLength = 0.01
    cfl_advective: CflFactor = 0.4
    cfl_diffusive: CflFactor = 0.5
    snapshot_stride: PositiveInt = 2
    amplitude: PositiveFloat = 1.0
    width: PositiveLength = 1.0
    near_r_min: PositiveLength = 0.125
    near_r_max: PositiveLength = 2.125
    near_z_extent: PositiveLength = 2.0
    near_n_z: PositiveInt = 65
    near_axis_r: PositiveLength = 0.25
    near_axis_z: float = 0.0
    thm12_r: PositiveLength = 0.4


class ValidData:
    """
    Container for various valid parameter classes.
    """

    class Grid:
        """
        Grid covering the cylinder C_{1,4} with a margin and nodes at its faces.
        """

        r_min = ValidItems().r_min
        r_max = ValidItems().r_max
        z_min = -ValidItems().z_extent
        z_max = ValidItems().z_extent
        n_r = ValidItems().n_r
        n_z = ValidItems().n_z

    class SmallGrid:
        """
        Coarse grid with a node on z = 0, for brute-force comparisons.
        """

        r_min = ValidItems().r_min
        r_max = ValidItems().r_max
        z_min = -ValidItems().z_extent
        z_max = ValidItems().z_extent
        n_r = ValidItems().n_small
        n_z = ValidItems().n_small

    class NearAxisGrid:
        """
        Grid reaching in to r = 1/8 for the pointwise bounds near the axis.
        """

        r_min = ValidItems().near_r_min
        r_max = ValidItems().near_r_max
        z_min = -ValidItems().near_z_extent
        z_max = ValidItems().near_z_extent
        n_r = ValidItems().n_r
        n_z = ValidItems().near_n_z

    class Run:
        """
        Short run defaults.
        """

        t_end = ValidItems().t_end
        cfl_advective = ValidItems().cfl_advective
        cfl_diffusive = ValidItems().cfl_diffusive
        snapshot_stride = ValidItems().snapshot_stride

    class SwirlGaussian:
        """
        Parameters of the swirl-gaussian initial condition.
        """

        amplitude = ValidItems().amplitude
        width = ValidItems().width

    class Monitor:
        """
        Evaluation points of the pointwise monitors.
        """

        near_axis = (ValidItems().near_axis_r, 0.0, ValidItems().near_axis_z)
        thm12_point = (ValidItems().thm12_r, 0.0, 0.0)
