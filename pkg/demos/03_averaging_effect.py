"""
What happens when a Godunov scheme averages the two speeds at an interface
instead of solving the discontinuous-speed Riemann problem.

Smooth data hardly notices. Data that jumps where the speed jumps ends up
with a visibly different plateau.
"""
# %%
from dcgodunov import (ExperimentConfig, PolynomialJump, RiemannJump, Sinusoid,
                       SinusoidJump, compare_schemes)

# %%
for ic in (Sinusoid(), SinusoidJump(), PolynomialJump(), RiemannJump()):
    rep = compare_schemes(ExperimentConfig(ic=ic))
    fmt = lambda v: "  n/a  " if v is None else f"{v:+.4f}"
    print(f"{type(ic).__name__:<15} proposed={fmt(rep.plateau_proposed)} "
          f"averaged={fmt(rep.plateau_averaged)} lambda={fmt(rep.lambda_exact)} "
          f"max|diff|={rep.max_abs_diff:.4f}")

# %% [markdown]
# The proposed plateau does not sit at lambda either. The two cells next to the
# interface only exchange information through the fan state, and together they
# conserve a_R^2 phi_p + a_L^2 phi_q. Their common limit, the discrete plateau, is
#     (a_R^2 phi_L + a_L^2 phi_R) / (a_L^2 + a_R^2)
# which is 9/13 for a = (-2|3), phi = (1|0), against lambda = 3/5.

# %%
print("discrete plateau 9/13 =", 9 / 13)
