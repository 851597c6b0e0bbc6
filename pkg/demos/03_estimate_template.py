"""Derive regression variables from annual levels and fit both specifications.

The bundled template is generated data with the 1947-2014 layout of the
public US series.  It is not the US record, so its estimates differ from
the reference values printed next to them.  Substitute a real dataset with
the same columns to reproduce the exercise.

    python demos/03_estimate_template.py [path/to/data.csv] [--plot]
"""

import sys
from pathlib import Path

from _plot import maybe_plot
from keynesgrowth import build_derived, fit_linear, fit_quadratic, load_csv, predict_unemployment_growth
from keynesgrowth.report import report_text

args = [a for a in sys.argv[1:] if not a.startswith("--")]
source = Path(args[0]) if args else Path(__file__).parents[1] / "data" / "us_template_1947_2014.csv"

ds = build_derived(load_csv(source))
print(f"{source.name}: {len(ds)} usable rows, {ds.year[0]}-{ds.year[-1]}\n")

quad, _ = fit_quadratic(ds)
lin, tech = fit_linear(ds)
print(report_text(quad))
print(report_text(lin))

predicted = predict_unemployment_growth(lin, ds)
maybe_plot(
    {"actual": (ds.year, ds.dU_over_U), "linear fit": (ds.year, predicted)},
    "Growth rate of unemployment",
    "year",
    "unemployment_growth_fit.png",
)
