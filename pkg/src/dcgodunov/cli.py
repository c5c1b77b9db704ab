"""Command line entry point: ``dcgodunov <subcommand> [flags]``."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .characteristics import (RegularizationParams, epsilon_sweep,
                              evaluate_regularized_solution, regularized_profile)
from .errors import StabilityError
from .experiments import (ExperimentConfig, PolynomialJump, RiemannJump, Sinusoid,
                          SinusoidJump, compare_schemes, default_plateau_window,
                          plateau_if_resolved, run_simulation)
from .figures import FIGURES, figure_table
from .godunov import SchemeKind
from .grid import Grid1D
from .report import write_report, write_table
from .riemann import (Blocked, Intermediate, LeftState, RiemannData, RightState,
                      classify, interface_solution)

EXIT_OK, EXIT_USAGE, EXIT_STABILITY, EXIT_IO = 0, 2, 3, 4


def _add_problem_flags(p, with_grid=True):
    p.add_argument("--a-left", type=float, default=-2.0)
    p.add_argument("--a-right", type=float, default=3.0)
    p.add_argument("--phi-left", type=float, default=1.0)
    p.add_argument("--phi-right", type=float, default=0.0)
    if with_grid:
        p.add_argument("--nx", type=int, default=400)
        p.add_argument("--cfl", type=float, default=0.9)
        when = p.add_mutually_exclusive_group()
        when.add_argument("--t-final", type=float, default=None)
        when.add_argument("--steps", type=int, default=None)
        p.add_argument("--ic", choices=["riemann", "sin", "sin-jump", "poly-jump"],
                       default="riemann")
        p.add_argument("--jump", type=float, default=0.5)
    p.add_argument("--out", default=None, help="output CSV path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcgodunov",
        description="Linear transport with a discontinuous wave speed.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("riemann", help="interface solution and intermediate constant")
    _add_problem_flags(p, with_grid=False)

    p = sub.add_parser("simulate", help="run one scheme")
    _add_problem_flags(p)
    p.add_argument("--scheme", choices=[k.value for k in SchemeKind], default="proposed")

    p = sub.add_parser("compare", help="proposed vs averaged Godunov schemes")
    _add_problem_flags(p)

    p = sub.add_parser("oracle", help="regularised exact solution / epsilon sweep")
    _add_problem_flags(p, with_grid=False)
    p.add_argument("--t-final", type=float, default=0.15)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--epsilons", default=None, help="comma separated, descending")
    p.add_argument("--probe", type=float, default=None)
    p.add_argument("--nx", type=int, default=401, help="profile sample count")
    p.add_argument("--method", choices=["closed", "numeric"], default=None)

    p = sub.add_parser("figure", help="regenerate a figure's data")
    p.add_argument("id", choices=sorted(FIGURES, key=int))
    p.add_argument("--out", default=None)
    return parser


def _initial_condition(args):
    if args.ic == "riemann":
        return RiemannJump(args.phi_left, args.phi_right)
    if args.ic == "sin":
        return Sinusoid()
    if args.ic == "sin-jump":
        return SinusoidJump(jump=args.jump)
    return PolynomialJump()


def _config(args, scheme=SchemeKind.PROPOSED):
    t_final, steps = args.t_final, args.steps
    if t_final is None and steps is None:
        t_final = 0.15
    return ExperimentConfig(grid=Grid1D(-1.0, 1.0, args.nx), a_left=args.a_left,
                            a_right=args.a_right, ic=_initial_condition(args),
                            scheme=scheme, t_final=t_final, n_steps=steps, cfl=args.cfl)


def _describe(sol) -> str:
    if isinstance(sol, LeftState):
        return f"left-state {sol.value!r}"
    if isinstance(sol, RightState):
        return f"right-state {sol.value!r}"
    if isinstance(sol, Intermediate):
        return f"intermediate {sol.lam!r}"
    assert isinstance(sol, Blocked)
    return f"blocked {sol.left_value!r} {sol.right_value!r}"


def cmd_riemann(args):
    data = RiemannData(args.a_left, args.a_right, args.phi_left, args.phi_right)
    sol = interface_solution(data)
    print(f"case: {classify(data.a_left, data.a_right).value}")
    print(f"solution: {_describe(sol)}")
    if isinstance(sol, Intermediate):
        print(f"lambda: {sol.lam!r}")


def cmd_simulate(args):
    cfg = _config(args, SchemeKind(args.scheme))
    result = run_simulation(cfg)
    meta = {**cfg.metadata(), "dt": result.dt, "n_steps_run": result.n_steps}
    window = default_plateau_window(cfg, result.state.time)
    if window is not None:
        meta["plateau"] = plateau_if_resolved(result.state, window)
    write_report(result.state, args.out, meta)


def cmd_compare(args):
    report = compare_schemes(_config(args))
    write_report(report, args.out)
    print(f"plateau proposed={report.plateau_proposed} averaged={report.plateau_averaged} "
          f"lambda={report.lambda_exact} max_abs_diff={report.max_abs_diff:.6g}",
          file=sys.stderr)


def cmd_oracle(args):
    data = RiemannData(args.a_left, args.a_right, args.phi_left, args.phi_right)
    meta = {"a_left": data.a_left, "a_right": data.a_right, "phi_left": data.phi_left,
            "phi_right": data.phi_right, "time": args.t_final}
    if args.epsilons:
        epsilons = [float(v) for v in args.epsilons.split(",") if v.strip()]
        probe = 0.0 if args.probe is None else args.probe
        rows = epsilon_sweep(probe, args.t_final, data, epsilons,
                             method=args.method or "numeric")
        write_report(rows, args.out, {**meta, "probe": probe})
        return
    eps = 0.0002 if args.epsilon is None else args.epsilon
    params = RegularizationParams(eps, data)
    method = args.method or "closed"
    meta.update(epsilon=eps, method=method)
    if args.probe is not None:
        print(repr(evaluate_regularized_solution(args.probe, args.t_final, params, method)))
        return
    x = np.linspace(-1.0, 1.0, args.nx)
    write_table(args.out, {"x": x, "phi": regularized_profile(x, args.t_final, params, method)},
                meta)


def cmd_figure(args):
    cols, meta = figure_table(args.id)
    write_table(args.out, cols, meta)


COMMANDS = {"riemann": cmd_riemann, "simulate": cmd_simulate, "compare": cmd_compare,
            "oracle": cmd_oracle, "figure": cmd_figure}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except StabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STABILITY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
