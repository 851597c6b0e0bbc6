"""Regenerate ``us_template_1947_2014.csv``.

The template is synthetic: annual levels shaped like US data whose derived
rows satisfy the unemployment-growth equation with the published linear
coefficients plus noise of scale 0.005.  It fixes the file layout and row
count; it is not a substitute for real data.
"""

from pathlib import Path

from keynesgrowth._io import csv_text, write_atomic
from keynesgrowth.synthetic import LINEAR_COEFFICIENTS, synthetic_macro_series

ms = synthetic_macro_series(LINEAR_COEFFICIENTS, 1947, 2014, noise=0.005, seed=1947)
columns = {
    "year": ms.year,
    "output": ms.Y,
    "capital": ms.K,
    "labor_force": ms.LF,
    "employment": ms.EMP,
    "labor_share": ms.labor_share,
}
write_atomic(Path(__file__).with_name("us_template_1947_2014.csv"), csv_text(columns))
