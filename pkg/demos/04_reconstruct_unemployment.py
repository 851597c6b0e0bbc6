"""Rebuild the unemployment path from capital growth alone.

Observed capital growth b(t), its change b'(t) and labor-force growth n(t)
are fed through two versions of the unemployment-growth equation, each
started from the first observed U:

* structural: the calibrated model, where the b' response is
  -1 / ((1 - alpha)(b + delta)) under Cobb-Douglas;
* fitted: the estimated linear equation, with slope -1 / (sigma * labor
  share * Y/K) taken from the data.

With standard calibrations the structural response is more than ten times
the estimated one, so the structural path overreacts to every swing in b'.
The fitted path tracks the observed series.

    python demos/04_reconstruct_unemployment.py [--plot]
"""

from pathlib import Path

import numpy as np

from _plot import maybe_plot
from keynesgrowth import CapitalGrowthPath, ModelParams, build_derived, fit_linear, load_csv
from keynesgrowth import predict_unemployment_growth, reconstruct_unemployment

source = Path(__file__).parents[1] / "data" / "us_template_1947_2014.csv"
ds = build_derived(load_csv(source))
fit, tech = fit_linear(ds)
params = ModelParams()

times = (ds.year - fit.t_origin).astype(float)
path = CapitalGrowthPath(times=times, b=ds.b, b_prime=ds.b_prime)
structural = reconstruct_unemployment(path, float(ds.U[0]), tech, ds.n_t, params)

growth = predict_unemployment_growth(fit, ds)
U_fit = ds.U[0] * np.exp(np.concatenate([[0.0], np.cumsum(growth[:-1])]))

calibrated = -1 / ((1 - params.curvature) * (float(np.mean(ds.b)) + params.depreciation))
print(f"b' response: calibrated {calibrated:.2f}, estimated {fit.slope:.3f}\n")

observed = 1 - 1 / ds.U
fitted = 1 - 1 / U_fit
print(" year  observed u  fitted u  structural u")
for i in range(0, len(ds), 8):
    print(f" {ds.year[i]}  {observed[i]:10.4f}  {fitted[i]:8.4f}  {structural.unemployment_rate[i]:12.4f}")
for label, series in (("fitted", fitted), ("structural", structural.unemployment_rate)):
    print(f"correlation of observed and {label} unemployment rates: {np.corrcoef(observed, series)[0, 1]:.3f}")

maybe_plot(
    {"observed": (ds.year, observed), "fitted": (ds.year, fitted)},
    "Unemployment rate",
    "year",
    "reconstruct_unemployment.png",
)
