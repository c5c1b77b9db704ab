"""
Half-cell Godunov schemes for ``phi_t + a(x) phi_x = 0``.

Each interface ``i-1/2`` between cells ``i-1`` and ``i`` produces two
half-cell states after one step: ``right`` (averaged over the half cell just
right of the interface, i.e. the left half of cell ``i``) and ``left`` (the
right half of cell ``i-1``). A cell's new value is the mean of the two half
states it owns::

    phi_i^{n+1} = (right_{i-1/2} + left_{i+1/2}) / 2

With ``r = dt / h`` a wave of speed ``a`` sweeps the fraction ``2 r |a|`` of
a half cell in one step, which is why the stability bound is
``2 r max|a| <= 1``.

Two interface treatments are provided:

* ``proposed_half_states`` resolves the jump in ``a`` with the
  discontinuous-speed Riemann solver (four sign cases, intermediate
  constant in the expansion case);
* ``averaged_half_states`` replaces ``a_{i-1}, a_i`` by their mean first,
  as averaged-speed solvers do, leaving only the two upwind cases.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDataError, StabilityError
from .grid import FieldState, SpeedField
from .riemann import intermediate_state

CFL_SLACK = 1e-12


class SchemeKind(enum.Enum):
    PROPOSED = "proposed"
    AVERAGED = "averaged"
    VISCOUS = "viscous"


@dataclass(frozen=True)
class HalfStates:
    right: np.ndarray | float  # half cell right of the interface
    left: np.ndarray | float   # half cell left of the interface


def _check_cfl(speed_bound, r):
    if not np.all(r > 0):
        raise StabilityError("mesh ratio r = dt/h must be positive")
    worst = float(np.max(2.0 * r * speed_bound))
    if worst > 1.0 + CFL_SLACK:
        raise StabilityError(
            f"CFL violated: 2 r max|a| = {worst:.6g} > 1")


def _scalar_or_array(arr, *inputs):
    if all(np.ndim(v) == 0 for v in inputs):
        return float(arr)
    return arr


def proposed_half_states(a_prev, a_curr, phi_prev, phi_curr, r) -> HalfStates:
    """
    Half states at the interface between cells ``prev`` and ``curr``.

    Accepts scalars or equal-shape arrays (one entry per interface). A zero
    speed sends no wave, so that side's half state keeps its cell value; the
    other side then follows the continuous limit of the neighbouring cases.

    Raises
    ------
    StabilityError
        If ``2 r max(|a_prev|, |a_curr|) > 1``.
    """
    ap, ac = np.asarray(a_prev, float), np.asarray(a_curr, float)
    fp, fc = np.asarray(phi_prev, float), np.asarray(phi_curr, float)
    _check_cfl(np.maximum(np.abs(ap), np.abs(ac)), r)

    fan = (ap < 0) & (ac > 0)
    with np.errstate(invalid="ignore", divide="ignore"):
        lam = np.where(fan, intermediate_state(ap, ac, fp, fc), fc)

    # incoming state for a right-going wave in cell `curr`
    into_right = np.where(fan, lam, fp)
    # incoming state for a left-going wave in cell `prev`
    into_left = np.where(fan, lam, fc)

    right = np.where(ac > 0, fc - 2.0 * r * ac * (fc - into_right), fc)
    left = np.where(ap < 0, fp - 2.0 * r * ap * (into_left - fp), fp)
    inputs = (a_prev, a_curr, phi_prev, phi_curr)
    return HalfStates(_scalar_or_array(right, *inputs),
                      _scalar_or_array(left, *inputs))


def averaged_half_states(a_prev, a_curr, phi_prev, phi_curr, r) -> HalfStates:
    """Half states with the interface speed replaced by ``(a_prev + a_curr)/2``."""
    ap, ac = np.asarray(a_prev, float), np.asarray(a_curr, float)
    fp, fc = np.asarray(phi_prev, float), np.asarray(phi_curr, float)
    alpha = 0.5 * (ap + ac)
    _check_cfl(np.abs(alpha), r)

    right = np.where(alpha > 0, fc - 2.0 * r * alpha * (fc - fp), fc)
    left = np.where(alpha < 0, fp - 2.0 * r * alpha * (fc - fp), fp)
    inputs = (a_prev, a_curr, phi_prev, phi_curr)
    return HalfStates(_scalar_or_array(right, *inputs),
                      _scalar_or_array(left, *inputs))


_HALF_STATES = {
    SchemeKind.PROPOSED: proposed_half_states,
    SchemeKind.AVERAGED: averaged_half_states,
}


def _with_ghosts(v: np.ndarray) -> np.ndarray:
    # outflow closure: exterior state copies the boundary cell
    return np.concatenate(([v[0]], v, [v[-1]]))


def godunov_step(state: FieldState, speeds: SpeedField, dt: float,
                 kind: SchemeKind = SchemeKind.PROPOSED) -> FieldState:
    """Advance ``state`` by one step of length ``dt``."""
    if kind not in _HALF_STATES:
        raise InvalidDataError(f"godunov_step does not run {kind!r}")
    if speeds.grid != state.grid:
        raise InvalidDataError("state and speeds live on different grids")
    r = dt / state.grid.h
    phi = _with_ghosts(state.values)
    a = _with_ghosts(speeds.values)
    hs = _HALF_STATES[kind](a[:-1], a[1:], phi[:-1], phi[1:], r)
    new = 0.5 * (hs.right[:-1] + hs.left[1:])
    return state.with_values(new, state.time + dt)


def max_stable_dt(speeds: SpeedField, cfl: float = 0.9) -> float:
    """Largest step with ``2 dt max|a| / h <= cfl``."""
    if not cfl > 0:
        raise InvalidDataError("cfl must be positive")
    if cfl > 1:
        raise StabilityError(f"cfl = {cfl:g} exceeds the stability limit 1")
    amax = speeds.max_abs
    if amax == 0:
        raise InvalidDataError("all speeds are zero; no CFL constraint to apply")
    return cfl * speeds.grid.h / (2.0 * amax)
