"""
Named presets that regenerate the data behind each reference figure.

``figure_table(fig_id)`` returns ``(columns, metadata)`` ready for
:func:`dcgodunov.report.write_table`. Figures 1-4 use the viscous centred
scheme for a fixed number of steps; figure 5 is the regularised exact
solution for a sequence of ``eps``; figures 10-17 compare the proposed and
averaged Godunov schemes.
"""
from __future__ import annotations

import numpy as np

from .characteristics import RegularizationParams, epsilon_sweep, regularized_profile
from .errors import InvalidDataError
from .experiments import (ExperimentConfig, PolynomialJump, RiemannJump, Sinusoid,
                          SinusoidJump, build_initial_condition, compare_schemes,
                          run_simulation)
from .godunov import SchemeKind
from .grid import Grid1D
from .riemann import RiemannData, compute_lambda, riemann_profile

FIG5_EPSILONS = (0.4, 0.12, 0.08, 0.04, 0.02, 0.0002)
FIG5_TIME = 0.15
FIG5_PROBE = 0.4   # 0.05 inside the right edge of the fan at FIG5_TIME

VISCOUS_STEPS = 100
VISCOUS_GRID = Grid1D(-1.0, 1.0, 100)

# one (a_left, a_right) pair per sign case, in case order 1..4
EXAMPLES = {
    1: {"ic": RiemannJump(1.0, 0.0),
        "speeds": ((1.0, 2.0), (-2.0, -1.0), (-2.0, 3.0), (2.0, -3.0))},
    2: {"ic": RiemannJump(-0.5, 1.0),
        "speeds": ((1.5, 0.5), (-0.5, -1.5), (-1.0, 4.0), (1.0, -4.0))},
}


def _viscous_run(ic, a_left, a_right):
    cfg = ExperimentConfig(grid=VISCOUS_GRID, a_left=a_left, a_right=a_right, ic=ic,
                           scheme=SchemeKind.VISCOUS, t_final=None, n_steps=VISCOUS_STEPS)
    return cfg, run_simulation(cfg)


def _four_cases(example):
    preset = EXAMPLES[example]
    x = VISCOUS_GRID.centers
    cols = {"x": x, "phi0": preset["ic"](x)}
    meta = {"example": example, "ic": repr(preset["ic"]), "n_cells": VISCOUS_GRID.n_cells,
            "steps": VISCOUS_STEPS, "scheme": "viscous"}
    for k, (aL, aR) in enumerate(preset["speeds"], start=1):
        cfg, res = _viscous_run(preset["ic"], aL, aR)
        cols[f"case{k}"] = res.state.values
        meta[f"case{k}_speeds"] = f"{aL:g}|{aR:g}"
        meta[f"case{k}_time"] = res.state.time
    meta["eps_visc"] = cfg.eps_visc
    return cols, meta


def _fan_case(example):
    preset = EXAMPLES[example]
    aL, aR = preset["speeds"][2]
    ic = preset["ic"]
    cfg, res = _viscous_run(ic, aL, aR)
    lam = compute_lambda(RiemannData(aL, aR, ic.phi_left, ic.phi_right))
    x = VISCOUS_GRID.centers
    cols = {"x": x, "phi0": ic(x), "phi_viscous": res.state.values,
            "lambda": np.full_like(x, lam)}
    meta = {**cfg.metadata(), "lambda": lam, "time": res.state.time}
    return cols, meta


def _regularized():
    data = RiemannData(-2.0, 3.0, 1.0, 0.0)
    x = np.linspace(-1.0, 1.0, 401)
    cols = {"x": x, "riemann": riemann_profile(x, FIG5_TIME, data)}
    for eps in FIG5_EPSILONS:
        cols[f"eps_{eps:g}"] = regularized_profile(x, FIG5_TIME, RegularizationParams(eps, data))
    meta = {"a_left": data.a_left, "a_right": data.a_right, "phi_left": data.phi_left,
            "phi_right": data.phi_right, "time": FIG5_TIME, "lambda": compute_lambda(data),
            "profile_trace": "closed", "probe": FIG5_PROBE}
    for row in epsilon_sweep(FIG5_PROBE, FIG5_TIME, data, FIG5_EPSILONS):
        meta[f"sweep_eps_{row.epsilon:g}"] = f"phi={row.phi_probe:.17g} err={row.abs_err:.17g}"
    return cols, meta


def _initial(ic):
    grid = ExperimentConfig().grid
    state = build_initial_condition(ic, grid)
    return {"x": grid.centers, "phi": state.values}, {"ic": repr(ic), "n_cells": grid.n_cells}


def _comparison(ic):
    report = compare_schemes(ExperimentConfig(ic=ic))
    cols = {"x": report.proposed.grid.centers,
            "phi0": ic(report.proposed.grid.centers),
            "phi_proposed": report.proposed.values,
            "phi_averaged": report.averaged.values}
    return cols, report.metadata()


FIGURES = {
    "1": lambda: _four_cases(1),
    "2": lambda: _fan_case(1),
    "3": lambda: _four_cases(2),
    "4": lambda: _fan_case(2),
    "5": _regularized,
    "10": lambda: _initial(Sinusoid()),
    "11": lambda: _comparison(Sinusoid()),
    "12": lambda: _initial(SinusoidJump()),
    "13": lambda: _comparison(SinusoidJump()),
    "14": lambda: _comparison(SinusoidJump()),
    "15": lambda: _initial(PolynomialJump()),
    "16": lambda: _comparison(PolynomialJump()),
    "17": lambda: _comparison(PolynomialJump()),
}


def figure_table(fig_id):
    key = str(fig_id).lower().removeprefix("fig").lstrip("0")
    if key not in FIGURES:
        raise InvalidDataError(f"no preset for figure {fig_id!r}; have {sorted(FIGURES, key=int)}")
    cols, meta = FIGURES[key]()
    return cols, {"figure": key, **meta}
