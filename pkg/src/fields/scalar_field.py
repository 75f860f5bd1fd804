"""
Node-sampled axisymmetric scalar fields.
"""

from typing import Union

import numpy as np
from pydantic import ValidationError, model_validator

from src.errors import FieldError
from src.geometry import Grid
from src.models import BaseModel

Operand = Union["ScalarField", float]


class ScalarField(BaseModel):
    """
    Samples of an axisymmetric scalar at every node of a grid.

    Values are read-only and always finite; every arithmetic operation
    returns a new field.

    Attributes:
        grid: The grid the samples live on.
        values: Array of shape (n_r, n_z).
        name: Identifier tag, e.g. ``gamma`` or ``v_r``.
    """

    grid: Grid
    values: np.ndarray
    name: str = ""

    @model_validator(mode="after")
    def check_values(self) -> "ScalarField":
        if self.values.shape != self.grid.shape:
            raise ValueError(
                f"shape {self.values.shape} does not match grid {self.grid.shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError(f"field {self.name or '<unnamed>'} has non-finite values")
        return self

    @classmethod
    def from_array(
        cls, grid: Grid, values: Union[np.ndarray, float], name: str = ""
    ) -> "ScalarField":
        """
        Build a field from an array or a constant.

        Args:
            grid (Grid): The grid.
            values (np.ndarray | float): Node samples, broadcast to the grid shape.
            name (str): Identifier tag.

        Returns:
            ScalarField: A field owning a read-only copy of the samples.

        Raises:
            FieldError: On a shape mismatch or non-finite samples.
        """
        try:
            array = np.array(np.broadcast_to(values, grid.shape), dtype=np.float64)
        except ValueError as e:
            raise FieldError(f"cannot broadcast {name or 'field'} to {grid.shape}") from e
        array.setflags(write=False)
        try:
            return cls(grid=grid, values=array, name=name)
        except ValidationError as e:
            raise FieldError("; ".join(str(err["msg"]) for err in e.errors())) from e

    @classmethod
    def zeros(cls, grid: Grid, name: str = "") -> "ScalarField":
        return cls.from_array(grid, 0.0, name)

    def renamed(self, name: str) -> "ScalarField":
        return ScalarField(grid=self.grid, values=self.values, name=name)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def _operand(self, other: Operand) -> Union[np.ndarray, float]:
        if isinstance(other, ScalarField):
            if other.grid != self.grid:
                raise FieldError(f"fields {self.name} and {other.name} differ in grid")
            return other.values
        return float(other)

    def __add__(self, other: Operand) -> "ScalarField":
        return ScalarField.from_array(self.grid, self.values + self._operand(other))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "ScalarField":
        return ScalarField.from_array(self.grid, self.values - self._operand(other))

    def __rsub__(self, other: Operand) -> "ScalarField":
        return ScalarField.from_array(self.grid, self._operand(other) - self.values)

    def __mul__(self, other: Operand) -> "ScalarField":
        return ScalarField.from_array(self.grid, self.values * self._operand(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "ScalarField":
        return ScalarField.from_array(self.grid, self.values / self._operand(other))

    def __neg__(self) -> "ScalarField":
        return ScalarField.from_array(self.grid, -self.values, self.name)


def same_grid(*fields: ScalarField) -> Grid:
    """The grid shared by all fields; FieldError if they differ."""
    grid = fields[0].grid
    for field in fields[1:]:
        if field.grid != grid:
            names = ", ".join(f.name or "<unnamed>" for f in fields)
            raise FieldError(f"fields {names} live on different grids")
    return grid
