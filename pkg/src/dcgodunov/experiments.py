"""
Scenario definitions and drivers for the averaging experiments.

A scenario is a two-state speed ``a = (a_left | a_right)`` with the jump at
the origin, one of a few initial profiles, and a scheme. ``run_simulation``
advances one scheme; ``compare_schemes`` runs the proposed and the averaged
Godunov schemes side by side on identical steps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional, Union

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import InvalidDataError, StabilityError
from .godunov import SchemeKind, godunov_step, max_stable_dt
from .grid import FieldState, Grid1D, SpeedField
from .riemann import RiemannData, SpeedCase, classify, intermediate_state
from .viscous import DEFAULT_EPS_VISC, ViscousConfig, default_dt, viscous_step

BOUNDARY_MARGIN_CELLS = 5


# ---------------------------------------------------------------- initial data

@dataclass(frozen=True)
class RiemannJump:
    phi_left: float = 1.0
    phi_right: float = 0.0

    def __call__(self, x):
        return np.where(np.asarray(x) < 0, self.phi_left, self.phi_right)


@dataclass(frozen=True)
class Sinusoid:
    """``amplitude * sin(wavenumber * pi * x + phase)``."""

    amplitude: float = 1.0
    wavenumber: float = 2.0
    phase: float = 0.0

    def __call__(self, x):
        return self.amplitude * np.sin(self.wavenumber * np.pi * np.asarray(x) + self.phase)


@dataclass(frozen=True)
class SinusoidJump:
    """Sinusoid shifted down by ``jump`` left of the origin and up right of it."""

    amplitude: float = 1.0
    wavenumber: float = 2.0
    jump: float = 0.5

    def __call__(self, x):
        x = np.asarray(x)
        base = self.amplitude * np.sin(self.wavenumber * np.pi * x)
        return np.where(x < 0, base - self.jump, base + self.jump)


@dataclass(frozen=True)
class PolynomialJump:
    """Separate polynomials on each half-line; coefficients lowest degree first."""

    left_coeffs: tuple = (-0.5, 0.0, 1.0)
    right_coeffs: tuple = (0.5, 0.0, -1.0)

    def __post_init__(self):
        if P.polyval(0.0, self.left_coeffs) == P.polyval(0.0, self.right_coeffs):
            raise InvalidDataError("polynomial pieces must jump at the origin")

    def __call__(self, x):
        x = np.asarray(x)
        return np.where(x < 0, P.polyval(x, self.left_coeffs),
                        P.polyval(x, self.right_coeffs))


InitialCondition = Union[RiemannJump, Sinusoid, SinusoidJump, PolynomialJump]


def build_initial_condition(kind: InitialCondition, grid: Grid1D) -> FieldState:
    return FieldState(grid, kind(grid.centers), 0.0)


# ---------------------------------------------------------------- configuration

@dataclass(frozen=True)
class ExperimentConfig:
    """
    One scenario. Give either ``t_final`` or ``n_steps``; with ``n_steps``
    the run takes that many full steps of the scheme's default ``dt``.
    """

    grid: Grid1D = field(default_factory=lambda: Grid1D(-1.0, 1.0, 400))
    a_left: float = -2.0
    a_right: float = 3.0
    ic: InitialCondition = field(default_factory=RiemannJump)
    scheme: SchemeKind = SchemeKind.PROPOSED
    t_final: Optional[float] = 0.15
    n_steps: Optional[int] = None
    cfl: float = 0.9
    eps_visc: float = DEFAULT_EPS_VISC

    def __post_init__(self):
        if (self.t_final is None) == (self.n_steps is None):
            raise InvalidDataError("give exactly one of t_final and n_steps")
        if self.t_final is not None and not (math.isfinite(self.t_final) and self.t_final >= 0):
            raise InvalidDataError("t_final must be finite and non-negative")
        if self.n_steps is not None and (int(self.n_steps) != self.n_steps or self.n_steps < 0):
            raise InvalidDataError("n_steps must be a non-negative integer")
        if not self.cfl > 0:
            raise InvalidDataError("cfl must be positive")
        if self.cfl > 1:
            raise StabilityError(f"cfl = {self.cfl:g} exceeds the stability limit 1")
        if not (math.isfinite(self.a_left) and math.isfinite(self.a_right)):
            raise InvalidDataError("speeds must be finite")

    @property
    def riemann_data(self) -> RiemannData:
        phi_l, phi_r = origin_states(self.ic, self.grid)
        return RiemannData(self.a_left, self.a_right, phi_l, phi_r)

    def speeds(self) -> SpeedField:
        return SpeedField.piecewise(self.grid, self.a_left, self.a_right)

    def time_step(self, scheme: SchemeKind | None = None) -> float:
        scheme = self.scheme if scheme is None else scheme
        speeds = self.speeds()
        if scheme is SchemeKind.VISCOUS:
            return default_dt(self.grid, speeds.max_abs, self.eps_visc)
        return max_stable_dt(speeds, self.cfl)

    def end_time(self, scheme: SchemeKind | None = None) -> float:
        if self.t_final is not None:
            return self.t_final
        return self.n_steps * self.time_step(scheme)

    def check_domain(self, scheme: SchemeKind | None = None) -> None:
        """Waves leaving the origin must stay clear of the boundaries."""
        reach = max(abs(self.a_left), abs(self.a_right)) * self.end_time(scheme)
        room = min(-self.grid.x_min, self.grid.x_max) - BOUNDARY_MARGIN_CELLS * self.grid.h
        if not reach < room:
            raise InvalidDataError(
                f"waves travel {reach:.4g} but only {room:.4g} fits inside the domain")

    def metadata(self) -> dict:
        return {
            "x_min": self.grid.x_min, "x_max": self.grid.x_max,
            "n_cells": self.grid.n_cells, "h": self.grid.h,
            "a_left": self.a_left, "a_right": self.a_right,
            "ic": repr(self.ic), "scheme": self.scheme.value,
            "t_final": self.t_final, "n_steps": self.n_steps,
            "cfl": self.cfl, "eps_visc": self.eps_visc,
        }


def origin_states(ic: InitialCondition, grid: Grid1D) -> tuple[float, float]:
    """Initial values in the two cells on either side of the origin."""
    x = grid.centers
    left, right = x[x < 0], x[x >= 0]
    if left.size == 0 or right.size == 0:
        raise InvalidDataError("the origin must lie inside the grid")
    return float(ic(left[-1])), float(ic(right[0]))


# ---------------------------------------------------------------- runs

@dataclass(frozen=True)
class SimulationResult:
    state: FieldState
    scheme: SchemeKind
    dt: float
    n_steps: int


def _stepper(config: ExperimentConfig, scheme: SchemeKind, speeds: SpeedField):
    if scheme is SchemeKind.VISCOUS:
        cfg = ViscousConfig(config.eps_visc)
        return lambda state, dt: viscous_step(state, speeds, cfg, dt)
    return lambda state, dt: godunov_step(state, speeds, dt, scheme)


def run_simulation(config: ExperimentConfig, scheme: SchemeKind | None = None) -> SimulationResult:
    """
    Advance the scenario's initial data to the final time.

    With ``t_final`` the last step is shortened so the run lands on it
    exactly.
    """
    scheme = config.scheme if scheme is None else scheme
    config.check_domain(scheme)
    speeds = config.speeds()
    state = build_initial_condition(config.ic, config.grid)
    step = _stepper(config, scheme, speeds)
    dt = config.time_step(scheme)

    if config.n_steps is not None:
        for _ in range(config.n_steps):
            state = step(state, dt)
        return SimulationResult(state, scheme, dt, config.n_steps)

    t_final = config.t_final
    if t_final == 0:
        return SimulationResult(state, scheme, dt, 0)
    n = max(1, math.ceil(t_final / dt * (1.0 - 1e-12)))
    for k in range(n):
        d = dt if k < n - 1 else t_final - (n - 1) * dt
        state = step(state, min(d, dt))
    state = state.with_values(state.values, t_final)
    return SimulationResult(state, scheme, dt, n)


def default_plateau_window(config: ExperimentConfig, t: float | None = None):
    """Window well inside the expansion fan ``[a_L t, a_R t]``, or None."""
    if classify(config.a_left, config.a_right) is not SpeedCase.LEFT_NEG_RIGHT_POS:
        return None
    t = config.end_time() if t is None else t
    return (-0.4 * abs(config.a_left) * t, 0.4 * config.a_right * t)


def extract_plateau(state: FieldState, window, plateau_tol: float | None = None):
    """
    Mean of ``state`` over ``window`` if the field is flat there, else None.

    Flat means every jump between neighbouring cells in the window is at most
    ``plateau_tol``, by default ``1e-3`` times the range of the whole field.
    """
    lo, hi = window
    x = state.grid.centers
    if not (state.grid.x_min <= lo < hi <= state.grid.x_max):
        raise InvalidDataError("plateau window must lie inside the grid")
    inside = (x >= lo) & (x <= hi)
    if np.count_nonzero(inside) < 5:
        raise InvalidDataError("plateau window must contain at least 5 cells")
    values = state.values
    if plateau_tol is None:
        plateau_tol = 1e-3 * float(np.ptp(values))
    segment = values[inside]
    if np.max(np.abs(np.diff(segment))) > plateau_tol:
        return None
    return float(np.mean(segment))


def plateau_if_resolved(state: FieldState, window, plateau_tol: float | None = None):
    """Like :func:`extract_plateau` but None when the grid is too coarse for ``window``."""
    if window is None:
        return None
    try:
        return extract_plateau(state, window, plateau_tol)
    except InvalidDataError:
        return None


@dataclass(frozen=True)
class ComparisonReport:
    config: ExperimentConfig
    proposed: FieldState
    averaged: FieldState
    plateau_proposed: Optional[float]
    plateau_averaged: Optional[float]
    lambda_exact: Optional[float]
    origin_states: tuple
    max_abs_diff: float
    dt: float
    n_steps: int

    def metadata(self) -> dict:
        meta = self.config.metadata()
        meta.update({
            "dt": self.dt, "n_steps_run": self.n_steps,
            "phi_origin_left": self.origin_states[0],
            "phi_origin_right": self.origin_states[1],
            "lambda_exact": self.lambda_exact,
            "plateau_proposed": self.plateau_proposed,
            "plateau_averaged": self.plateau_averaged,
            "max_abs_diff": self.max_abs_diff,
        })
        return meta


def compare_schemes(config: ExperimentConfig) -> ComparisonReport:
    prop = run_simulation(config, SchemeKind.PROPOSED)
    avg = run_simulation(config, SchemeKind.AVERAGED)
    window = default_plateau_window(config)
    states = origin_states(config.ic, config.grid)
    lam = None
    plateaus = (None, None)
    if window is not None:
        lam = float(intermediate_state(config.a_left, config.a_right, *states))
        plateaus = (plateau_if_resolved(prop.state, window),
                    plateau_if_resolved(avg.state, window))
    diff = float(np.max(np.abs(prop.state.values - avg.state.values)))
    return ComparisonReport(config, prop.state, avg.state, plateaus[0], plateaus[1],
                            lam, states, diff, prop.dt, prop.n_steps)


def with_scheme(config: ExperimentConfig, scheme: SchemeKind) -> ExperimentConfig:
    return replace(config, scheme=scheme)
