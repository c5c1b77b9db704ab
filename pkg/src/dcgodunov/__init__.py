"""Godunov schemes for linear transport with a discontinuous wave speed."""
from .characteristics import (RegularizationParams, TraceResult, characteristic_trace_closed,
                              characteristic_trace_numeric, epsilon_sweep,
                              evaluate_regularized_solution, regularized_ic,
                              regularized_speed)
from .errors import (DegenerateSpeedsError, InvalidDataError, StabilityError,
                     StiffnessError, UnsupportedCaseError)
from .experiments import (ComparisonReport, ExperimentConfig, PolynomialJump, RiemannJump,
                          Sinusoid, SinusoidJump, build_initial_condition, compare_schemes,
                          extract_plateau, run_simulation)
from .godunov import (HalfStates, SchemeKind, averaged_half_states, godunov_step,
                      max_stable_dt, proposed_half_states)
from .grid import FieldState, Grid1D, SpeedField
from .riemann import (Blocked, Intermediate, LeftState, RiemannData, RightState, SpeedCase,
                      classify, compute_lambda, interface_solution)
from .viscous import ViscousConfig, viscous_step

__version__ = "0.1.0"
