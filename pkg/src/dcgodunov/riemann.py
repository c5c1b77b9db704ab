"""
Riemann problem for ``phi_t + a(x) phi_x = 0`` with a two-state speed.

The speed and the initial data jump at the origin::

    a(x)    = a_left   (x < 0),  a_right   (x > 0)
    phi0(x) = phi_left (x < 0),  phi_right (x > 0)

The interface trace at x = 0 depends only on the signs of the two speeds.
When the speeds point away from the interface a new constant state appears
between the two waves; it is the average of the two states weighted by the
*opposite* speed magnitude (the reciprocal-speed average, written here with a
cleared denominator so that tiny speeds neither overflow nor divide by zero).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DegenerateSpeedsError, InvalidDataError


class SpeedCase(enum.Enum):
    BOTH_POSITIVE = "both-positive"
    LEFT_NEG_RIGHT_POS = "left-neg-right-pos"
    BOTH_NEGATIVE = "both-negative"
    LEFT_POS_RIGHT_NEG = "left-pos-right-neg"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class RiemannData:
    a_left: float
    a_right: float
    phi_left: float
    phi_right: float

    def __post_init__(self):
        for name in ("a_left", "a_right", "phi_left", "phi_right"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise InvalidDataError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))


@dataclass(frozen=True)
class LeftState:
    value: float


@dataclass(frozen=True)
class RightState:
    value: float


@dataclass(frozen=True)
class Intermediate:
    lam: float


@dataclass(frozen=True)
class Blocked:
    """No wave leaves the interface; both sides keep their initial state."""

    left_value: float
    right_value: float


InterfaceSolution = Union[LeftState, RightState, Intermediate, Blocked]


def classify(a_left: float, a_right: float, zero_tol: float = 0.0) -> SpeedCase:
    """Sign pattern of the two speeds; ``|a| <= zero_tol`` counts as zero."""
    if not (math.isfinite(a_left) and math.isfinite(a_right)):
        raise InvalidDataError("wave speeds must be finite")
    if not zero_tol >= 0:
        raise InvalidDataError("zero_tol must be non-negative")
    if abs(a_left) <= zero_tol or abs(a_right) <= zero_tol:
        return SpeedCase.DEGENERATE
    if a_left > 0:
        return SpeedCase.BOTH_POSITIVE if a_right > 0 else SpeedCase.LEFT_POS_RIGHT_NEG
    return SpeedCase.LEFT_NEG_RIGHT_POS if a_right > 0 else SpeedCase.BOTH_NEGATIVE


def intermediate_state(a_left, a_right, phi_left, phi_right):
    """Vectorised intermediate constant; no sign checks, no zero guard."""
    wl = np.abs(a_right)
    wr = np.abs(a_left)
    return (wl * phi_left + wr * phi_right) / (wl + wr)


def compute_lambda(data: RiemannData) -> float:
    """
    Intermediate constant of the expansion case ``a_left < 0 < a_right``.

    Returns ``(|a_R| phi_L + |a_L| phi_R) / (|a_L| + |a_R|)``, a convex
    combination of the two states.

    >>> compute_lambda(RiemannData(-2.0, 3.0, 1.0, 0.0))
    0.6
    """
    if abs(data.a_left) + abs(data.a_right) == 0:
        raise DegenerateSpeedsError("both speeds are zero")
    lam = float(intermediate_state(data.a_left, data.a_right,
                                   data.phi_left, data.phi_right))
    # rounding may step just outside the hull when phi_L ~ phi_R
    lo, hi = sorted((data.phi_left, data.phi_right))
    return min(max(lam, lo), hi)


def interface_solution(data: RiemannData, zero_tol: float = 0.0) -> InterfaceSolution:
    case = classify(data.a_left, data.a_right, zero_tol)
    if case is SpeedCase.BOTH_POSITIVE:
        return LeftState(data.phi_left)
    if case is SpeedCase.BOTH_NEGATIVE:
        return RightState(data.phi_right)
    if case is SpeedCase.LEFT_NEG_RIGHT_POS:
        return Intermediate(compute_lambda(data))
    # blocked waves and zero-speed sides transport nothing across x = 0
    return Blocked(data.phi_left, data.phi_right)


def riemann_profile(x, t: float, data: RiemannData) -> np.ndarray:
    """
    Exact solution of the piecewise-constant problem sampled at ``x``.

    Used as the reference curve the regularised solutions converge to. The
    jump at the origin travels with the speed of the half-line it enters.
    """
    x = np.asarray(x, dtype=float)
    aL, aR = data.a_left, data.a_right
    pL, pR = data.phi_left, data.phi_right
    case = classify(aL, aR)
    if case is SpeedCase.BOTH_POSITIVE:
        return np.where(x < aR * t, pL, pR)
    if case is SpeedCase.BOTH_NEGATIVE:
        return np.where(x < aL * t, pL, pR)
    if case is SpeedCase.LEFT_NEG_RIGHT_POS:
        lam = compute_lambda(data)
        return np.where(x < aL * t, pL, np.where(x < aR * t, lam, pR))
    if case is SpeedCase.DEGENERATE:
        # limit of the neighbouring cases: a zero side feeds its state
        # into a side whose wave moves away from the origin
        if aR > 0:
            return np.where(x < aR * t, pL, pR)
        if aL < 0:
            return np.where(x < aL * t, pL, pR)
    return np.where(x < 0, pL, pR)
