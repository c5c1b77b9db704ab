"""
The Riemann problem for phi_t + a(x) phi_x = 0 with a jump in a at x = 0.

Four sign patterns of (a_left | a_right) give four kinds of solution. Only
the expansion case (a_left < 0 < a_right) creates a new state, the
speed-weighted mean lambda.
"""
# %%
import numpy as np

from dcgodunov import RiemannData, classify, compute_lambda, interface_solution
from dcgodunov.riemann import riemann_profile

# %% one example per sign case
for a_l, a_r in [(1, 2), (-2, -1), (-2, 3), (2, -3)]:
    data = RiemannData(a_l, a_r, 1.0, 0.0)
    print(f"a=({a_l:+d}|{a_r:+d})  {classify(a_l, a_r).value:<22} {interface_solution(data)}")

# %% lambda weights each state by the speed on the *other* side
data = RiemannData(-2.0, 3.0, 1.0, 0.0)
print("lambda =", compute_lambda(data))   # (3*1 + 2*0) / 5

# %% the exact profile at t = 0.15: left state, fan plateau, right state
x = np.linspace(-0.6, 0.6, 13)
for xi, v in zip(x, riemann_profile(x, 0.15, data)):
    print(f"{xi:+.2f}  {v:.3f}")
