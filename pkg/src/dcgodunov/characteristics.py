"""
Exact solution of the regularised Riemann problem by backward characteristics.

Both jumps are smoothed over ``[-eps, eps]`` with two quadratic arcs that
meet at the midpoint of the jump::

    f_eps(x) = f_L                          x < -eps
             = c (x + eps)^2 + f_L          -eps <= x < 0
             = -c (x - eps)^2 + f_R         0 <= x < eps
             = f_R                          x >= eps,     c = (f_R - f_L) / (2 eps^2)

The regularised problem has a smooth speed, so ``phi(x, t) = phi0(y(0))``
where ``y`` solves ``dy/ds = a_eps(y)`` with ``y(t) = x``.

Two independent routes compute the foot ``y(0)``:

``characteristic_trace_closed``
    Piecewise closed form, valid for ``a_L < 0 < a_R``. On the quadratic
    arcs the ODE is of Riccati type, ``u' = beta u^2 - |a|``, whose solution
    with ``w = sigma u`` is ``w = (1 - g) / (1 + g)``, ``g(s) = g(t)
    exp(2 theta (s - t))`` (``sigma = sqrt(beta/|a|)``,
    ``theta = sqrt(beta |a|)``). The tracer restarts the formula each time
    the path crosses ``-eps``, ``0`` or ``eps``.

``characteristic_trace_numeric``
    Classical RK4 with step-doubling error control; works for any sign
    pattern and is used as the oracle for the closed form.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidDataError, StiffnessError, UnsupportedCaseError
from .riemann import RiemannData, riemann_profile

EXP_CLAMP = 700.0


class Interval(enum.IntEnum):
    LEFT = 0          # x < -eps
    LEFT_BLEND = 1    # -eps <= x < 0
    RIGHT_BLEND = 2   # 0 <= x < eps
    RIGHT = 3         # x >= eps


@dataclass(frozen=True)
class RegularizationParams:
    epsilon: float
    data: RiemannData

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise InvalidDataError("epsilon must be a positive finite length")

    @property
    def alpha(self) -> float:
        return (self.data.phi_right - self.data.phi_left) / (2.0 * self.epsilon**2)

    @property
    def beta(self) -> float:
        return (self.data.a_right - self.data.a_left) / (2.0 * self.epsilon**2)


@dataclass(frozen=True)
class Segment:
    interval: Interval
    entry_time: float   # later time, where the backward path enters
    exit_time: float


@dataclass(frozen=True)
class TraceResult:
    foot: float
    segments: tuple[Segment, ...] = field(default=())


def interval_of(x: float, eps: float) -> Interval:
    if x < -eps:
        return Interval.LEFT
    if x < 0:
        return Interval.LEFT_BLEND
    if x < eps:
        return Interval.RIGHT_BLEND
    return Interval.RIGHT


def _blend(x: float, eps: float, left: float, right: float) -> float:
    c = (right - left) / (2.0 * eps**2)
    if x < -eps:
        return left
    if x < 0:
        return c * (x + eps) ** 2 + left
    if x < eps:
        return -c * (x - eps) ** 2 + right
    return right


def regularized_ic(x: float, params: RegularizationParams) -> float:
    d = params.data
    return _blend(x, params.epsilon, d.phi_left, d.phi_right)


def regularized_speed(x: float, params: RegularizationParams) -> float:
    d = params.data
    return _blend(x, params.epsilon, d.a_left, d.a_right)


def sonic_point(params: RegularizationParams) -> float:
    """Zero of the regularised speed when ``a_L < 0 < a_R``."""
    aL, aR, eps = params.data.a_left, params.data.a_right, params.epsilon
    if not (aL < 0 < aR):
        raise UnsupportedCaseError("a sonic point exists only for a_L < 0 < a_R")
    if -aL <= aR:
        return -eps + eps * math.sqrt(2.0 * -aL / (aR - aL))
    return eps - eps * math.sqrt(2.0 * aR / (aR - aL))


def _check_time(t, to_time):
    if not (math.isfinite(t) and t >= 0):
        raise InvalidDataError("t must be finite and non-negative")
    if not 0 <= to_time <= t:
        raise InvalidDataError("to_time must lie in [0, t]")


# ---------------------------------------------------------------- closed form

def _riccati_exit(w0, w_boundary, theta):
    """Backward time for ``w`` to climb from ``w0`` to ``w_boundary``, or None."""
    if not (w_boundary < 1.0 and w0 <= w_boundary):
        return None
    g0 = (1.0 - w0) / (1.0 + w0)
    gb = (1.0 - w_boundary) / (1.0 + w_boundary)
    return math.log(g0 / gb) / (2.0 * theta)


def _riccati_advance(w0, tau, theta):
    g0 = (1.0 - w0) / (1.0 + w0)
    g = g0 * math.exp(max(-2.0 * theta * tau, -EXP_CLAMP))
    return (1.0 - g) / (1.0 + g)


def characteristic_trace_closed(x: float, t: float, params: RegularizationParams,
                                to_time: float = 0.0) -> TraceResult:
    """
    Foot of the backward characteristic through ``(x, t)`` at ``s = to_time``.

    Only the expansion case ``a_L < 0 < a_R`` has a closed form here.
    """
    _check_time(t, to_time)
    d, eps = params.data, params.epsilon
    aL, aR = d.a_left, d.a_right
    if not (aL < 0 < aR):
        raise UnsupportedCaseError("closed-form trace requires a_L < 0 < a_R")
    beta = params.beta
    sigma1, theta1 = math.sqrt(beta / -aL), math.sqrt(beta * -aL)
    sigma2, theta2 = math.sqrt(beta / aR), math.sqrt(beta * aR)

    y, s = float(x), float(t)
    region = interval_of(y, eps)
    segments = []
    while True:
        budget = s - to_time
        nxt = None
        if region is Interval.LEFT:
            tau = (-eps - y) / -aL
            if tau < budget:
                y_new, nxt = -eps, Interval.LEFT_BLEND
            else:
                tau, y_new = budget, y - aL * budget
        elif region is Interval.RIGHT:
            tau = (y - eps) / aR
            if tau < budget:
                y_new, nxt = eps, Interval.RIGHT_BLEND
            else:
                tau, y_new = budget, y - aR * budget
        elif region is Interval.LEFT_BLEND:
            w0 = sigma1 * (y + eps)
            tau = _riccati_exit(w0, sigma1 * eps, theta1)
            if tau is not None and tau < budget:
                y_new, nxt = 0.0, Interval.RIGHT_BLEND
            else:
                tau = budget
                y_new = _riccati_advance(w0, tau, theta1) / sigma1 - eps if tau > 0 else y
        else:
            z0 = sigma2 * (eps - y)
            tau = _riccati_exit(z0, sigma2 * eps, theta2)
            if tau is not None and tau < budget:
                y_new, nxt = 0.0, Interval.LEFT_BLEND
            else:
                tau = budget
                y_new = eps - _riccati_advance(z0, tau, theta2) / sigma2 if tau > 0 else y
        s_new = s - tau
        segments.append(Segment(region, s, s_new))
        y, s = y_new, s_new
        if nxt is None:
            return TraceResult(y, tuple(segments))
        # -eps sits in LEFT_BLEND already; a crossing at 0 flips the blend
        region = nxt


# ---------------------------------------------------------------- numeric oracle

def _rk4(f, y, h):
    k1 = f(y)
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return y + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


def characteristic_trace_numeric(x: float, t: float, params: RegularizationParams,
                                 tol: float = 1e-10, to_time: float = 0.0) -> TraceResult:
    """
    Integrate ``dy/ds = a_eps(y)`` backward from ``s = t`` to ``s = to_time``.

    Each RK4 step is compared with two half steps; the step is accepted
    when their difference over 15 is below ``tol`` and the extrapolated
    value is kept.

    Raises
    ------
    StiffnessError
        If the controller asks for a step below ``1e-15 t``.
    """
    _check_time(t, to_time)
    if not tol > 0:
        raise InvalidDataError("tol must be positive")
    d, eps = params.data, params.epsilon
    aL, aR = d.a_left, d.a_right
    c = params.beta

    def f(y):
        if y < -eps:
            return aL
        if y < 0:
            return c * (y + eps) ** 2 + aL
        if y < eps:
            return -c * (y - eps) ** 2 + aR
        return aR

    y, s = float(x), float(t)
    span = s - to_time
    region = interval_of(y, eps)
    seg_start = s
    segments = []
    if span == 0:
        return TraceResult(y, (Segment(region, s, s),))

    amax = max(abs(aL), abs(aR), 1e-300)
    step = min(span, 0.1 * eps / amax)
    min_step = 1e-15 * t
    while s > to_time:
        # the error estimate cannot see a blend zone that a step jumps over
        gap = min(abs(y + eps), abs(y), abs(y - eps))
        step = min(step, s - to_time, (gap + 0.5 * eps) / amax)
        coarse = _rk4(f, y, -step)
        fine = _rk4(f, _rk4(f, y, -0.5 * step), -0.5 * step)
        err = abs(fine - coarse) / 15.0
        if err <= tol:
            y = fine + (fine - coarse) / 15.0
            s = to_time if step >= s - to_time else s - step
            new_region = interval_of(y, eps)
            if new_region is not region:
                segments.append(Segment(region, seg_start, s))
                region, seg_start = new_region, s
            factor = 4.0 if err == 0 else min(4.0, 0.9 * (tol / err) ** 0.2)
            step *= max(factor, 1.0)
        else:
            step *= max(0.1, 0.9 * (tol / err) ** 0.2)
            if step < min_step:
                raise StiffnessError(
                    f"step {step:.3g} below underflow guard at s = {s:.6g}")
    segments.append(Segment(region, seg_start, to_time))
    return TraceResult(y, tuple(segments))


# ---------------------------------------------------------------- solutions

def evaluate_regularized_solution(x: float, t: float, params: RegularizationParams,
                                  method: str = "closed", tol: float = 1e-10) -> float:
    if method == "closed":
        trace = characteristic_trace_closed(x, t, params)
    elif method == "numeric":
        trace = characteristic_trace_numeric(x, t, params, tol=tol)
    else:
        raise InvalidDataError(f"unknown trace method {method!r}")
    return regularized_ic(trace.foot, params)


def regularized_profile(xs, t: float, params: RegularizationParams,
                        method: str = "closed") -> np.ndarray:
    return np.array([evaluate_regularized_solution(float(x), t, params, method)
                     for x in np.asarray(xs, dtype=float)])


@dataclass(frozen=True)
class SweepRow:
    epsilon: float
    phi_probe: float
    abs_err: float        # against the piecewise-constant Riemann solution
    asymptotic: bool = False


def epsilon_sweep(x_probe: float, t: float, data: RiemannData, epsilons,
                  method: str = "numeric", tol: float = 1e-10) -> list[SweepRow]:
    """
    Regularised solution at one probe for a descending list of ``eps``.

    The last row is flagged as the asymptotic estimate of the ``eps -> 0``
    limit.
    """
    eps = [float(e) for e in epsilons]
    if not eps:
        raise InvalidDataError("need at least one epsilon")
    if any(not e > 0 for e in eps):
        raise InvalidDataError("epsilons must be positive")
    if any(b >= a for a, b in zip(eps, eps[1:])):
        raise InvalidDataError("epsilons must be strictly descending")
    limit = float(riemann_profile(x_probe, t, data))
    rows = []
    for k, e in enumerate(eps):
        value = evaluate_regularized_solution(
            x_probe, t, RegularizationParams(e, data), method=method, tol=tol)
        rows.append(SweepRow(e, value, abs(value - limit), asymptotic=k == len(eps) - 1))
    return rows
