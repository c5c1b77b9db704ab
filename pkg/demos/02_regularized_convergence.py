"""
An independent check of lambda: smooth the jumps in a and phi over a width
eps, solve exactly along characteristics, and let eps shrink.
"""
# %%
from dcgodunov import RegularizationParams, RiemannData, epsilon_sweep
from dcgodunov.characteristics import (characteristic_trace_closed,
                                       characteristic_trace_numeric, sonic_point)

data = RiemannData(-2.0, 3.0, 1.0, 0.0)

# %% backward characteristics from the fan pile up near the sonic point
p = RegularizationParams(0.1, data)
print("sonic point:", sonic_point(p))
for x in (-0.2, 0.0, 0.2, 0.4):
    closed = characteristic_trace_closed(x, 0.15, p)
    numeric = characteristic_trace_numeric(x, 0.15, p)
    print(f"x={x:+.1f}  foot closed={closed.foot:+.10f}  numeric={numeric.foot:+.10f}  "
          f"regions={[s.interval.name for s in closed.segments]}")

# %% the probe value approaches lambda as eps -> 0
for row in epsilon_sweep(0.4, 0.15, data, [0.4, 0.12, 0.08, 0.04, 0.02, 0.0002]):
    print(f"eps={row.epsilon:<7g} phi={row.phi_probe:.6f}  |phi - lambda|={row.abs_err:.2e}")
