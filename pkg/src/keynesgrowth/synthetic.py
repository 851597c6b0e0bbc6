"""Synthetic datasets that satisfy the unemployment-growth equation by construction.

Both generators start from a technology path ``a(t)``, a ``b'`` slope and
i.i.d. normal noise, so that

    dU_over_U - n_t + b = a(t) + slope * b_prime + noise

holds exactly row by row.  :func:`synthetic_derived` returns the regression
variables directly; :func:`synthetic_macro_series` returns annual levels
which :func:`~keynesgrowth.dataproc.build_derived` maps back onto the same
rows.
"""

from __future__ import annotations

import numpy as np

from .dataproc import DerivedSeries, MacroSeries

__all__ = ["LINEAR_COEFFICIENTS", "synthetic_derived", "synthetic_macro_series"]

# (const, t, b_prime) of the published linear fit
LINEAR_COEFFICIENTS = (0.029, -0.00037, -0.582)


def _split(coefficients):
    coefficients = tuple(float(c) for c in coefficients)
    if len(coefficients) not in (3, 4):
        raise ValueError("coefficients are (const, t[, t2], b_prime)")
    return coefficients[:-1], coefficients[-1]


def _rate(time_coefs, t):
    return sum(c * t**k for k, c in enumerate(time_coefs))


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def synthetic_derived(
    coefficients=LINEAR_COEFFICIENTS,
    n_rows: int = 66,
    noise: float = 0.0,
    seed=0,
    start_year: int = 1949,
    design_seed=12345,
) -> DerivedSeries:
    """Regression variables generated from known coefficients.

    ``design_seed`` fixes the capital-growth and labor-force paths, ``seed``
    draws the noise; replications with a fixed design vary only ``seed``.
    """
    time_coefs, slope = _split(coefficients)
    design = _rng(design_seed)
    noise_rng = _rng(seed)
    years = np.arange(start_year, start_year + n_rows)
    t = (years - start_year).astype(float)

    # b over n_rows + 1 years so that b' has a predecessor for the first row
    cycle = np.sin(np.arange(n_rows + 1) * 2 * np.pi / 7.3)
    b_full = (
        0.035
        - 0.0002 * np.arange(n_rows + 1)
        + 0.008 * cycle
        + 0.004 * design.standard_normal(n_rows + 1)
    )
    b = b_full[1:]
    b_prime = np.diff(b_full)
    n_t = 0.015 + 0.003 * design.standard_normal(n_rows)

    eps = noise * noise_rng.standard_normal(n_rows) if noise > 0 else np.zeros(n_rows)
    dep = _rate(time_coefs, t) + slope * b_prime + eps
    dU = dep + n_t - b
    U = 1.06 * np.exp(np.concatenate([[0.0], np.cumsum(dU[:-1])]))
    return DerivedSeries(
        year=years,
        U=U,
        dU_over_U=dU,
        b=b,
        b_prime=b_prime,
        n_t=n_t,
        dep_var=dU - n_t + b,
        time_index=t,
        labor_share=np.full(n_rows, 0.62),
        y_over_k=np.full(n_rows, 0.42),
        meta={"synthetic": True, "coefficients": list(coefficients), "noise": noise},
    )


def synthetic_macro_series(
    coefficients=LINEAR_COEFFICIENTS,
    start_year: int = 1947,
    end_year: int = 2014,
    noise: float = 0.0,
    seed=0,
) -> MacroSeries:
    """Annual levels whose derived rows obey the equation exactly.

    Capital growth is exogenous, ``b = a(t) + n_t + (z[t] - z[t-1])`` with
    ``z`` a stationary AR(1), and unemployment absorbs the equation.  The
    level of ``U`` is shifted, if needed, to keep ``EMP < LF``; only growth
    rates enter the regression.  Capital is a year-end stock and time is
    counted from ``start_year + 2``, matching the default conventions of
    :func:`~keynesgrowth.dataproc.build_derived`.
    """
    time_coefs, slope = _split(coefficients)
    rng = _rng(seed)
    years = np.arange(start_year, end_year + 1)
    N = len(years)
    t = (years - (start_year + 2)).astype(float)

    n_t = 0.016 - 0.00008 * np.arange(N) + 0.004 * rng.standard_normal(N)
    z = np.zeros(N + 1)
    for i in range(1, N + 1):
        z[i] = 0.6 * z[i - 1] + 0.012 * rng.standard_normal()
    a = _rate(time_coefs, t)
    b = a + n_t + np.diff(z)
    b_prime = np.concatenate([[0.0], np.diff(b)])
    eps = noise * rng.standard_normal(N) if noise > 0 else np.zeros(N)
    dU = a + n_t - b + slope * b_prime + eps  # growth over year i -> i + 1

    log_u = np.log(1.06) + np.concatenate([[0.0], np.cumsum(dU[:-1])])
    log_u += max(0.0, np.log(1.01) - log_u.min())
    # year-end capital: growth during year i is ln K[i] - ln K[i-1]
    log_k = np.log(3.0e12) + np.concatenate([[0.0], np.cumsum(b[1:])])
    log_lf = np.log(6.0e7) + np.concatenate([[0.0], np.cumsum(n_t[:-1])])
    LF = np.exp(log_lf)
    EMP = LF / np.exp(log_u)
    K = np.exp(log_k)
    Y = K * (0.42 + 0.01 * np.sin(np.arange(N) / 5.0))
    share = 0.62 + 0.01 * np.cos(np.arange(N) / 7.0)
    return MacroSeries(year=years, Y=Y, K=K, LF=LF, EMP=EMP, labor_share=share)
