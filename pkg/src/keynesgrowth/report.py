"""Plain-text and key/value renderings of a regression fit."""

from __future__ import annotations

import warnings

import numpy as np

from ._io import fmt
from .errors import SignWarning, UndefinedProductError
from .estimate import REFERENCE_ESTIMATES, RegressionResult, structural_product

TITLES = {
    "linear": "linear technology path: dep_var ~ 1 + t + b_prime",
    "quadratic": "quadratic technology path: dep_var ~ 1 + t + t2 + b_prime",
}


def _product(fit):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SignWarning)
        try:
            value = structural_product(fit)
        except UndefinedProductError:
            return None, ["slope on b_prime is zero; structural product undefined"]
    return value, [str(w.message) for w in caught]


def report_dict(fit: RegressionResult) -> dict:
    """Machine-readable summary of a fit."""
    product, product_notes = _product(fit)
    tech = fit.tech_path()
    t_last = float(fit.years[-1] - fit.t_origin)
    return {
        "spec": fit.spec,
        "response": "dU_over_U - n_t + b",
        "terms": list(fit.names),
        "coefficients": fit.coef,
        "standard_errors": fit.se,
        "t_ratios": fit.t_ratios,
        "r_squared": fit.r_squared,
        "n_obs": fit.n_obs,
        "first_year": int(fit.years[0]),
        "last_year": int(fit.years[-1]),
        "t_origin_year": fit.t_origin,
        "structural_product": product,
        "tech_growth_first": tech(float(fit.years[0] - fit.t_origin)),
        "tech_growth_last": tech(t_last),
        "reference_estimates": REFERENCE_ESTIMATES[fit.spec],
        "notes": list(fit.notes) + product_notes,
    }


def report_text(fit: RegressionResult) -> str:
    """Human-readable table of coefficients and diagnostics."""
    info = report_dict(fit)
    lines = [
        f"Unemployment-growth regression, {TITLES[fit.spec]}",
        f"response: {info['response']}",
        f"years: {info['first_year']}-{info['last_year']}  n_obs = {fit.n_obs}  "
        f"t = year - {fit.t_origin}",
        "",
        f"{'term':<10}{'coef':>20}{'std.err':>20}{'t-ratio':>20}{'reference':>14}",
    ]
    ref = info["reference_estimates"]
    for name in fit.names:
        lines.append(
            f"{name:<10}{fmt(info['coefficients'][name]):>20}"
            f"{fmt(info['standard_errors'][name]):>20}"
            f"{fmt(info['t_ratios'][name]):>20}"
            f"{fmt(ref[name]):>14}"
        )
    lines += [
        "",
        f"R^2 = {fmt(fit.r_squared)}  (reference {fmt(ref['r_squared'])})",
    ]
    if info["structural_product"] is not None:
        lines.append(
            "sigma * labor_share * Y/K = -1/slope = " + fmt(info["structural_product"])
        )
    lines.append(
        f"technology growth a(t): {fmt(info['tech_growth_first'])} in {info['first_year']}, "
        f"{fmt(info['tech_growth_last'])} in {info['last_year']}"
    )
    for note in info["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def tech_path_columns(fits: dict, years) -> dict:
    """Per-year ``a(t)`` for each fitted specification."""
    years = np.asarray(years)
    columns = {"year": years}
    for spec, fit in fits.items():
        columns[f"a_{spec}"] = fit.tech_path()(years - fit.t_origin)
    return columns
