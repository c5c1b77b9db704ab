"""Uniform 1D grids and the cell-centred fields that live on them."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidDataError


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of ``n_cells`` cells covering ``[x_min, x_max]``."""

    x_min: float
    x_max: float
    n_cells: int

    def __post_init__(self):
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise InvalidDataError("grid bounds must be finite")
        if not self.x_min < self.x_max:
            raise InvalidDataError("x_min must be smaller than x_max")
        if int(self.n_cells) != self.n_cells or self.n_cells < 2:
            raise InvalidDataError("n_cells must be an integer >= 2")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.h

    @property
    def faces(self) -> np.ndarray:
        return self.x_min + np.arange(self.n_cells + 1) * self.h


def _as_field_values(values, grid: Grid1D, what: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.shape != (grid.n_cells,):
        raise InvalidDataError(
            f"{what} has shape {arr.shape}, expected ({grid.n_cells},)")
    if not np.all(np.isfinite(arr)):
        raise InvalidDataError(f"{what} contains non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class FieldState:
    """Cell values of the transported scalar at time ``time``."""

    grid: Grid1D
    values: np.ndarray = field(repr=False)
    time: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "values",
                           _as_field_values(self.values, self.grid, "values"))
        if not (np.isfinite(self.time) and self.time >= 0):
            raise InvalidDataError("time must be finite and non-negative")

    def with_values(self, values, time: float) -> FieldState:
        return FieldState(self.grid, values, time)


@dataclass(frozen=True)
class SpeedField:
    """Per-cell wave speeds ``a(x_i)``; constant in time."""

    grid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values",
                           _as_field_values(self.values, self.grid, "speeds"))

    @classmethod
    def piecewise(cls, grid: Grid1D, a_left: float, a_right: float,
                  interface: float = 0.0) -> SpeedField:
        """Two-state speed, ``a_left`` for x < interface, else ``a_right``."""
        x = grid.centers
        return cls(grid, np.where(x < interface, float(a_left), float(a_right)))

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))
