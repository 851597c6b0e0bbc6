"""Full-employment baseline.

Start an economy at half its balanced-growth capital ratio and watch kd
converge.  Along the way output per effective worker rises and the rental
rate falls, and at the steady state capital grows at a + n.

    python demos/01_solow_baseline.py [--plot]
"""

import numpy as np

from _plot import maybe_plot
from keynesgrowth import ModelParams, simulate_solow, steady_state

params = ModelParams()
a = 0.03
k_star = steady_state(params, a)
print(f"composite saving rate sigma = {params.sigma:.3f}")
print(f"steady-state capital per effective worker k* = {k_star:.6f}")

path = simulate_solow(0.5 * k_star, params, a=a, horizon=100)
for year in (0, 10, 25, 50, 100):
    i = int(np.argmin(np.abs(path.times - year)))
    print(f"  t = {year:3d}  kd = {path.kd[i]:.6f}  y = {path.y[i]:.6f}  r = {path.r[i]:.6f}")

# half-life from the linearised dynamics
speed = (1 - params.curvature) * (a + params.laborforce_growth + params.depreciation)
print(f"convergence speed {speed:.4f} per year, half-life {np.log(2) / speed:.1f} years")

maybe_plot({"kd": (path.times, path.kd)}, "Capital per effective worker", "years", "solow_baseline.png")
