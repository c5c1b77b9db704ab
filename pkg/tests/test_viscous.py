import numpy as np
import pytest

from dcgodunov.characteristics import RegularizationParams, evaluate_regularized_solution
from dcgodunov.errors import StabilityError
from dcgodunov.experiments import ExperimentConfig, run_simulation
from dcgodunov.figures import VISCOUS_GRID, VISCOUS_STEPS
from dcgodunov.godunov import SchemeKind
from dcgodunov.grid import FieldState, Grid1D, SpeedField
from dcgodunov.riemann import RiemannData
from dcgodunov.viscous import ViscousConfig, default_dt, stability_number, viscous_step


def test_constant_field_preserved():
    g = Grid1D(-1, 1, 50)
    speeds = SpeedField(g, np.linspace(-3, 3, 50))
    cfg = ViscousConfig(0.1)
    new = viscous_step(FieldState(g, np.full(50, 1.25)), speeds, cfg)
    np.testing.assert_allclose(new.values, 1.25, atol=1e-12, rtol=0)


def test_pure_heat_step_on_spike():
    g = Grid1D(0, 1, 21)
    phi = np.zeros(21)
    phi[10] = 1.0
    cfg = ViscousConfig(0.1, dt=1e-4)
    new = viscous_step(FieldState(g, phi), SpeedField(g, np.zeros(21)), cfg)
    assert new.values[10] == pytest.approx(1 - 2 * 0.1 * 1e-4 / g.h**2)
    assert new.values[9] == pytest.approx(0.1 * 1e-4 / g.h**2)


def test_default_dt_is_inside_bound():
    g = Grid1D(-1, 1, 400)
    dt = default_dt(g, 3.0, 0.1)
    assert stability_number(dt, g, 3.0, 0.1) <= 1.0
    assert dt == pytest.approx(0.4 * g.h**2 / 0.2)


def test_unstable_step_is_refused():
    g = Grid1D(-1, 1, 100)
    cfg = ViscousConfig(0.1, dt=1e-2)
    with pytest.raises(StabilityError):
        viscous_step(FieldState(g, np.zeros(100)), SpeedField(g, np.ones(100)), cfg)


def test_fan_plateau_is_lambda_and_no_overshoot():
    g = Grid1D(-1, 1, 400)
    speeds = SpeedField.piecewise(g, -2.0, 3.0)
    cfg = ViscousConfig(0.1)
    dt = default_dt(g, 3.0, 0.1)
    state = FieldState(g, np.where(g.centers < 0, 1.0, 0.0))
    for _ in range(round(0.15 / dt)):
        state = viscous_step(state, speeds, cfg, dt)
        assert state.values.min() >= -1e-10 and state.values.max() <= 1 + 1e-10
    window = np.abs(g.centers) < 0.1
    assert np.all(np.abs(state.values[window] - 0.6) <= 0.05)


def test_hundred_steps_on_figure_grid():
    cfg = ExperimentConfig(grid=VISCOUS_GRID, scheme=SchemeKind.VISCOUS,
                           t_final=None, n_steps=VISCOUS_STEPS)
    state = run_simulation(cfg).state
    central = state.values[np.abs(state.grid.centers) < 0.05]
    assert np.all(np.abs(central - 0.6) <= 0.05)


def test_agrees_with_regularized_solution():
    g = Grid1D(-1, 1, 800)  # h = 1/400
    state = run_simulation(ExperimentConfig(grid=g, t_final=0.2, scheme=SchemeKind.VISCOUS)).state
    oracle = evaluate_regularized_solution(0.0, 0.2, RegularizationParams(2e-4, RiemannData(-2, 3, 1, 0)))
    origin = state.values[g.n_cells // 2 - 1: g.n_cells // 2 + 1]
    assert np.all(np.abs(origin - oracle) <= 0.05)
