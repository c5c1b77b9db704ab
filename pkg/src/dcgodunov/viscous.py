"""
Explicit centred scheme with first-order artificial viscosity.

    phi_i^{n+1} = phi_i - a_i dt (phi_{i+1} - phi_{i-1}) / (2h)
                        + nu dt (phi_{i+1} - 2 phi_i + phi_{i-1}) / h^2

This is an independent check on the Riemann solution: nothing about the
interface is built in, the plateau emerges from the dynamics alone.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDataError, StabilityError
from .grid import FieldState, Grid1D, SpeedField

DEFAULT_EPS_VISC = 0.1


@dataclass(frozen=True)
class ViscousConfig:
    eps_visc: float = DEFAULT_EPS_VISC
    dt: float | None = None
    n_steps: int | None = None

    def __post_init__(self):
        if not self.eps_visc >= 0:
            raise InvalidDataError("eps_visc must be non-negative")
        if self.dt is not None and not self.dt > 0:
            raise InvalidDataError("dt must be positive")


def stability_number(dt: float, grid: Grid1D, max_speed: float, eps_visc: float) -> float:
    """``dt * (max|a|/h + 2 nu/h^2)``; the scheme is stable when this is <= 1."""
    h = grid.h
    return dt * (max_speed / h + 2.0 * eps_visc / h**2)


def default_dt(grid: Grid1D, max_speed: float, eps_visc: float) -> float:
    h = grid.h
    bounds = []
    if max_speed > 0:
        bounds.append(h / max_speed)
    if eps_visc > 0:
        bounds.append(h**2 / (2.0 * eps_visc))
    if not bounds:
        raise InvalidDataError("zero speed and zero viscosity: nothing bounds dt")
    return 0.4 * min(bounds)


def viscous_step(state: FieldState, speeds: SpeedField, cfg: ViscousConfig,
                 dt: float | None = None) -> FieldState:
    """
    One explicit step; ``dt`` overrides ``cfg.dt`` (e.g. a shortened last step).

    Raises ``StabilityError`` when the combined advection-diffusion bound
    is violated.
    """
    grid = state.grid
    if speeds.grid != grid:
        raise InvalidDataError("state and speeds live on different grids")
    if dt is None:
        dt = cfg.dt if cfg.dt is not None else default_dt(grid, speeds.max_abs, cfg.eps_visc)
    if not dt > 0:
        raise StabilityError("dt must be positive")
    number = stability_number(dt, grid, speeds.max_abs, cfg.eps_visc)
    if number > 1.0 + 1e-12:
        raise StabilityError(f"unstable explicit step: dt*(|a|/h + 2nu/h^2) = {number:.6g}")

    h = grid.h
    phi = state.values
    padded = np.concatenate(([phi[0]], phi, [phi[-1]]))
    east, west = padded[2:], padded[:-2]
    new = (phi
           - speeds.values * dt * (east - west) / (2.0 * h)
           + cfg.eps_visc * dt * (east - 2.0 * phi + west) / h**2)
    return state.with_values(new, state.time + dt)
