"""Capital growth as the driver of unemployment.

Capital grows at exactly a + n, so unemployment is constant until year 10.
Then capital growth moves by half a point either way.  In the year of the step the
acceleration b' cuts U'/U sharply, and afterwards U falls at the rate
b - a - n.  Reversing the shock does the opposite.

    python demos/02_capital_shock.py [--plot]
"""

from _plot import maybe_plot
from keynesgrowth import ModelParams, reconstruct_unemployment
from keynesgrowth.keynes import step_shock_path

params = ModelParams()
a, U0 = 0.03, 1.25
curves = {}
for label, after in (("faster capital growth", 0.045), ("slower capital growth", 0.035)):
    path = step_shock_path(0.04, after, t_jump=10, horizon=30, step=1.0)
    result = reconstruct_unemployment(path, U0, a, params.laborforce_growth, params)
    print(label)
    for t in (9, 10, 11, 30):
        print(
            f"  t = {t:2d}  b = {result.b[t]:.3f}  b' = {result.b_prime[t]:+.3f}  "
            f"U'/U = {result.dU_over_U[t]:+.5f}  unemployment rate = {result.unemployment_rate[t]:.4f}"
        )
    curves[label] = (result.times, result.unemployment_rate)

maybe_plot(curves, "Unemployment rate after a capital-growth shock", "years", "capital_shock.png")
