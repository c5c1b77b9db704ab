import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from dcgodunov.characteristics import (Interval, RegularizationParams,
                                       characteristic_trace_closed,
                                       characteristic_trace_numeric, epsilon_sweep,
                                       evaluate_regularized_solution, regularized_ic,
                                       regularized_speed, sonic_point)
from dcgodunov.errors import InvalidDataError, UnsupportedCaseError
from dcgodunov.riemann import RiemannData

FAN = RiemannData(-2.0, 3.0, 1.0, 0.0)


def params(eps, data=FAN):
    return RegularizationParams(eps, data)


def test_derived_coefficients():
    p = params(0.1, RiemannData(-2, 3, 0, 1))
    assert p.alpha == pytest.approx(1 / 0.02)
    assert p.beta == pytest.approx(5 / 0.02)


def test_regularized_ic_values():
    eps = 0.1
    p = params(eps, RiemannData(-2, 3, 0.0, 1.0))
    assert regularized_ic(-2 * eps, p) == 0.0
    assert regularized_ic(0.0, p) == pytest.approx(0.5)
    assert regularized_ic(eps / 2, p) == pytest.approx(0.875)
    assert regularized_ic(2 * eps, p) == 1.0


@pytest.mark.parametrize("knot", [-1.0, 0.0, 1.0])
def test_blends_are_continuous(knot):
    p = params(0.05)
    x = knot * p.epsilon
    for f in (regularized_ic, regularized_speed):
        assert f(x - 1e-12, p) == pytest.approx(f(x + 1e-12, p), abs=1e-8)


def test_regularized_speed_values():
    p = params(0.1)
    assert regularized_speed(0.1, p) == 3.0
    assert regularized_speed(0.0, p) == pytest.approx(0.5)


def test_sonic_point_against_bisection():
    p = params(0.1)
    root = brentq(lambda x: regularized_speed(x, p), -0.1, 0.1, xtol=1e-15)
    assert sonic_point(p) == pytest.approx(root, abs=1e-13)
    assert sonic_point(p) == pytest.approx(-0.01056, abs=1e-5)
    mirrored = params(0.1, RiemannData(-3, 2, 1, 0))
    root = brentq(lambda x: regularized_speed(x, mirrored), -0.1, 0.1, xtol=1e-15)
    assert sonic_point(mirrored) == pytest.approx(root, abs=1e-13)


def test_closed_trace_linear_region():
    tr = characteristic_trace_closed(-0.5, 0.1, params(0.1))
    assert tr.foot == pytest.approx(-0.3, abs=1e-15)
    assert [s.interval for s in tr.segments] == [Interval.LEFT]


@pytest.mark.parametrize("trace", [characteristic_trace_closed, characteristic_trace_numeric])
def test_zero_time_is_identity(trace):
    for x in (-0.7, -0.05, 0.0, 0.03, 0.4):
        assert trace(x, 0.0, params(0.1)).foot == x


def test_closed_matches_numeric_point():
    p = params(0.1)
    a = characteristic_trace_closed(0.05, 0.5, p).foot
    b = characteristic_trace_numeric(0.05, 0.5, p).foot
    assert a == pytest.approx(b, abs=1e-8)


def test_segments_are_contiguous_and_end_at_foot():
    p = params(0.1)
    for trace in (characteristic_trace_closed, characteristic_trace_numeric):
        tr = trace(0.6, 0.5, p)
        assert tr.segments[0].entry_time == 0.5
        assert tr.segments[-1].exit_time == 0.0
        for a, b in zip(tr.segments, tr.segments[1:]):
            assert a.exit_time == b.entry_time
        assert tr.segments[-1].interval in (Interval.LEFT_BLEND, Interval.RIGHT_BLEND)
        assert [s.interval for s in tr.segments][0] is Interval.RIGHT


def test_closed_rejects_other_cases():
    with pytest.raises(UnsupportedCaseError):
        characteristic_trace_closed(0.0, 1.0, params(0.1, RiemannData(1, 2, 1, 0)))
    with pytest.raises(InvalidDataError):
        characteristic_trace_closed(0.0, -1.0, params(0.1))


def test_numeric_exact_in_constant_region():
    p = params(0.1, RiemannData(1.5, 2.5, 1, 0))
    tr = characteristic_trace_numeric(0.9, 0.2, p)
    assert tr.foot == pytest.approx(0.9 - 2.5 * 0.2, abs=1e-10)


def test_numeric_trace_stops_at_sonic_point():
    p = params(0.04)
    tr = characteristic_trace_numeric(0.2, 1.0, p)
    assert tr.foot > sonic_point(p)
    assert tr.foot == pytest.approx(sonic_point(p), abs=1e-8)


@pytest.mark.parametrize("data", [RiemannData(1, 2, 1, 0), RiemannData(-1, -2, 1, 0),
                                  RiemannData(2, -3, 1, 0)])
def test_numeric_handles_all_sign_cases(data):
    p = params(0.05, data)
    for x in np.linspace(-0.5, 0.5, 11):
        tr = characteristic_trace_numeric(float(x), 0.2, p)
        assert math.isfinite(tr.foot)


def test_fan_value_converges_to_lambda():
    value = evaluate_regularized_solution(0.0, 1.0, params(2e-4))
    assert value == pytest.approx(0.6, abs=0.01)
    assert evaluate_regularized_solution(-10.0, 0.1, params(0.1)) == 1.0


def test_solution_at_zero_time_is_regularized_ic():
    p = params(0.1)
    for x in (-0.2, -0.05, 0.02, 0.3):
        assert evaluate_regularized_solution(x, 0.0, p) == regularized_ic(x, p)


@settings(max_examples=40, deadline=None)
@given(st.floats(-1, 1), st.floats(0.01, 1), st.floats(0.05, 0.95))
def test_semigroup(x, t, frac):
    p = params(0.1)
    tol = 1e-10
    s1 = frac * t
    direct = characteristic_trace_numeric(x, t, p, tol=tol).foot
    mid = characteristic_trace_numeric(x, t, p, tol=tol, to_time=s1).foot
    composed = characteristic_trace_numeric(mid, s1, p, tol=tol).foot
    # local tolerances accumulate over the steps of both legs
    assert composed == pytest.approx(direct, abs=1e-8)


@settings(max_examples=40, deadline=None)
@given(st.floats(-1, 1), st.floats(-1, 1), st.floats(0.01, 1), st.sampled_from([0.4, 0.1, 0.02]))
def test_foot_map_is_monotone(x1, x2, t, eps):
    lo, hi = sorted((x1, x2))
    p = params(eps)
    assert (characteristic_trace_closed(lo, t, p).foot
            <= characteristic_trace_closed(hi, t, p).foot + 1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(-2, 2), st.floats(0, 1), st.floats(1e-3, 0.5),
       st.floats(-5, 5), st.floats(-5, 5))
def test_range_preservation(x, t, eps, pl, pr):
    p = params(eps, RiemannData(-2, 3, pl, pr))
    v = evaluate_regularized_solution(x, t, p)
    assert min(pl, pr) - 1e-12 <= v <= max(pl, pr) + 1e-12


def test_sweep_decreases_at_fan_probe():
    rows = epsilon_sweep(0.4, 0.15, FAN, [0.4, 0.12, 0.08, 0.04, 0.02, 0.0002])
    errs = [r.abs_err for r in rows]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    assert rows[-1].asymptotic and not any(r.asymptotic for r in rows[:-1])


def test_sweep_outside_fan_and_constant_data():
    rows = epsilon_sweep(-0.8, 0.15, FAN, [0.05])
    assert rows[0].phi_probe == 1.0 and rows[0].abs_err == 0.0
    rows = epsilon_sweep(0.1, 0.15, RiemannData(-2, 3, 0.3, 0.3), [0.4, 0.1, 0.01])
    assert all(r.phi_probe == 0.3 for r in rows)


def test_sweep_validates_epsilons():
    with pytest.raises(InvalidDataError):
        epsilon_sweep(0.0, 0.1, FAN, [0.1, 0.2])
    with pytest.raises(InvalidDataError):
        epsilon_sweep(0.0, 0.1, FAN, [0.1, -0.01])
