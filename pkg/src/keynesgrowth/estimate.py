"""Least-squares fits of the unemployment-growth equation.

The response is ``dep_var = U'/U - n + b`` and the regressors are a
polynomial in time plus ``b'``:

    dep_var = c0 + c1 t [+ c2 t^2] + slope * b'.

The time polynomial is the technology growth rate ``a(t)``, and
``-1 / slope`` estimates ``sigma * labor_share * Y/K``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import comb

import numpy as np
from scipy.linalg import solve_triangular

from .dataproc import DerivedSeries
from .errors import (
    AlignmentError,
    DomainError,
    SignWarning,
    SingularDesignError,
    UndefinedProductError,
)

__all__ = [
    "TechPath",
    "RegressionResult",
    "ols_fit",
    "fit_quadratic",
    "fit_linear",
    "fit_specification",
    "design_matrix",
    "predict_unemployment_growth",
    "structural_product",
    "REFERENCE_ESTIMATES",
]

# published estimates for 1947-2014 US data, for side-by-side reporting
REFERENCE_ESTIMATES = {
    "quadratic": {"const": 0.023, "t": 0.00018, "t2": -0.000008, "b_prime": -0.597, "r_squared": 0.59},
    "linear": {"const": 0.029, "t": -0.00037, "b_prime": -0.582, "r_squared": 0.54},
}

SPECIFICATIONS = {"linear": 1, "quadratic": 2}

_RANK_TOL = 1e-10


@dataclass(frozen=True)
class TechPath:
    """Technology growth rate ``a(t) = a1 + 2 a2 t + 3 a3 t^2``.

    The coefficients are those of ``ln A = a0 + a1 t + a2 t^2 + a3 t^3``;
    ``a0`` never enters a growth rate and is not stored.
    """

    a1: float
    a2: float = 0.0
    a3: float = 0.0

    @classmethod
    def from_rate_polynomial(cls, coefficients) -> "TechPath":
        """Build from the coefficients of ``a(t)`` itself, lowest order first."""
        c = list(coefficients) + [0.0] * (3 - len(coefficients))
        if len(c) > 3:
            raise DomainError("a(t) is at most quadratic in t")
        return cls(a1=float(c[0]), a2=float(c[1]) / 2.0, a3=float(c[2]) / 3.0)

    @property
    def rate_coefficients(self) -> tuple:
        return (self.a1, 2.0 * self.a2, 3.0 * self.a3)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        value = self.a1 + 2.0 * self.a2 * t + 3.0 * self.a3 * t * t
        return float(value) if value.ndim == 0 else value

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        value = 2.0 * self.a2 + 6.0 * self.a3 * t
        return float(value) if value.ndim == 0 else np.broadcast_to(value, t.shape).copy()


@dataclass(frozen=True)
class RegressionResult:
    """Ordinary least-squares fit.

    ``spec`` and ``t_origin`` are set by :func:`fit_specification` and
    identify how the design was built from a :class:`DerivedSeries`; they
    are ``None`` for a bare :func:`ols_fit`.
    """

    names: tuple
    coefficients: np.ndarray
    standard_errors: np.ndarray
    covariance: np.ndarray
    r_squared: float
    residuals: np.ndarray
    fitted: np.ndarray
    n_obs: int
    years: np.ndarray | None = None
    spec: str | None = None
    t_origin: int | None = None
    notes: tuple = field(default_factory=tuple)

    @property
    def coef(self) -> dict:
        return dict(zip(self.names, self.coefficients.tolist()))

    @property
    def se(self) -> dict:
        return dict(zip(self.names, self.standard_errors.tolist()))

    @property
    def t_ratios(self) -> dict:
        return dict(zip(self.names, (self.coefficients / self.standard_errors).tolist()))

    @property
    def slope(self) -> float:
        """Coefficient on ``b_prime``."""
        return float(self.coef["b_prime"])

    @property
    def dof(self) -> int:
        return self.n_obs - len(self.names)

    def tech_path(self) -> TechPath:
        if self.spec is None:
            raise DomainError("tech_path needs a fit produced by fit_linear or fit_quadratic")
        c = self.coef
        return TechPath.from_rate_polynomial([c["const"], c["t"], c.get("t2", 0.0)])


def ols_fit(X, y, names=None) -> RegressionResult:
    """Least squares by Householder QR.

    Parameters
    ----------
    X : array_like, shape (n_obs, p)
        Design matrix.  Include a column of ones for an intercept.
    y : array_like, shape (n_obs,)
    names : sequence of str, optional
        Column labels, used in rank errors and in the result.

    Returns
    -------
    RegressionResult
        Classical (homoskedastic) standard errors.  ``r_squared`` is
        ``1 - SSR/SST`` with ``SST`` about the mean, and 0 when ``y`` has no
        variance.

    Raises
    ------
    SingularDesignError
        If a column is (numerically) a linear combination of the columns
        before it.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise DomainError(f"shape mismatch: X {X.shape}, y {y.shape}")
    n_obs, p = X.shape
    names = tuple(names) if names is not None else tuple(f"x{j}" for j in range(p))
    if len(names) != p:
        raise DomainError(f"{len(names)} names for {p} columns")
    if n_obs <= p:
        raise DomainError(f"need more observations ({n_obs}) than regressors ({p})")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise DomainError("design and response must be finite")

    # unit-norm columns so the R diagonal is scale free
    scale = np.linalg.norm(X, axis=0)
    for j in range(p):
        if scale[j] == 0.0:
            raise SingularDesignError(f"column {names[j]!r} is identically zero", column=names[j])
    Q, R = np.linalg.qr(X / scale, mode="reduced")
    diag = np.abs(np.diag(R))
    for j in range(p):
        if diag[j] < _RANK_TOL:
            raise SingularDesignError(
                f"design is rank deficient: column {names[j]!r} is collinear with earlier columns",
                column=names[j],
            )
    qty = Q.T @ y
    beta_scaled = solve_triangular(R, qty, lower=False)
    beta = beta_scaled / scale

    fitted = X @ beta
    resid = y - fitted
    ssr = float(resid @ resid)
    centered = y - y.mean()
    sst = float(centered @ centered)
    notes = []
    if np.ptp(y) == 0.0 or sst == 0.0:
        r2 = 0.0
        notes.append("degenerate response: zero variance, R^2 reported as 0")
    else:
        r2 = min(1.0, max(0.0, 1.0 - ssr / sst))

    Rinv = solve_triangular(R, np.eye(p), lower=False)
    s2 = ssr / (n_obs - p)
    cov = s2 * (Rinv @ Rinv.T) / np.outer(scale, scale)
    se = np.sqrt(np.diag(cov))
    return RegressionResult(
        names=names,
        coefficients=beta,
        standard_errors=se,
        covariance=cov,
        r_squared=r2,
        residuals=resid,
        fitted=fitted,
        n_obs=n_obs,
        notes=tuple(notes),
    )


def _time(ds: DerivedSeries, t_origin: int | None):
    origin = int(ds.year[0]) if t_origin is None else int(t_origin)
    return np.asarray(ds.year, dtype=float) - origin, origin


def design_matrix(ds: DerivedSeries, spec: str, t_origin: int | None = None):
    """Raw design ``(1, t[, t^2], b')`` and its column names."""
    degree = _degree(spec)
    t, _ = _time(ds, t_origin)
    cols = [np.ones_like(t)] + [t**k for k in range(1, degree + 1)] + [np.asarray(ds.b_prime, float)]
    names = ("const", "t", "t2")[: degree + 1] + ("b_prime",)
    return np.column_stack(cols), names


def _degree(spec):
    try:
        return SPECIFICATIONS[spec]
    except KeyError:
        raise DomainError(f"unknown specification {spec!r}; expected one of {tuple(SPECIFICATIONS)}") from None


def fit_specification(ds: DerivedSeries, spec: str, t_origin: int | None = None) -> RegressionResult:
    """Fit ``dep_var`` on a time polynomial and ``b'``.

    Time is centered before factorization and the coefficients are mapped
    back, so the result is expressed in raw ``t = year - t_origin``.
    """
    degree = _degree(spec)
    min_rows = degree + 3
    if len(ds) < min_rows:
        raise DomainError(f"{spec} fit needs at least {min_rows} rows, got {len(ds)}")
    t, origin = _time(ds, t_origin)
    m = float(t.mean())
    tc = t - m
    X_c = np.column_stack([np.ones_like(t)] + [tc**k for k in range(1, degree + 1)] + [ds.b_prime])
    names = ("const", "t", "t2")[: degree + 1] + ("b_prime",)
    centered = ols_fit(X_c, ds.dep_var, names=names)

    # sum_k c_k (t - m)^k = sum_j raw_j t^j
    p = len(names)
    M = np.zeros((p, p))
    for k in range(degree + 1):
        for j in range(k + 1):
            M[j, k] = comb(k, j) * (-m) ** (k - j)
    M[p - 1, p - 1] = 1.0
    beta = M @ centered.coefficients
    cov = M @ centered.covariance @ M.T

    notes = list(centered.notes)
    if "t2" in names:
        crossing = _first_negative_time(beta[:3], float(t[0]))
        if crossing is not None:
            year = origin + crossing
            where = "inside the sample" if crossing <= t[-1] else "after the sample"
            notes.append(
                f"fitted technology growth turns negative at t = {crossing:.1f} "
                f"(year {year:.1f}, {where}); a negative present rate is implausible, "
                "prefer the linear path"
            )
    return RegressionResult(
        names=names,
        coefficients=beta,
        standard_errors=np.sqrt(np.diag(cov)),
        covariance=cov,
        r_squared=centered.r_squared,
        residuals=centered.residuals,
        fitted=centered.fitted,
        n_obs=centered.n_obs,
        years=np.asarray(ds.year).copy(),
        spec=spec,
        t_origin=origin,
        notes=tuple(notes),
    )


def _first_negative_time(rate_coefs, t_start: float):
    """Earliest ``t >= t_start`` from which ``c0 + c1 t + c2 t^2`` goes negative."""
    c0, c1, c2 = (float(c) for c in rate_coefs)
    if c0 + c1 * t_start + c2 * t_start**2 < 0:
        return t_start
    if c2 == 0.0:
        return -c0 / c1 if c1 < 0 else None
    roots = np.roots([c2, c1, c0])
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-12 and r.real >= t_start)
    for r in real:
        # the rate must actually decrease through the root
        if c1 + 2 * c2 * r < 0:
            return float(r)
    return None


def fit_quadratic(ds: DerivedSeries, t_origin: int | None = None):
    """Quadratic technology path: regress on ``(1, t, t^2, b')``.

    Returns ``(RegressionResult, TechPath)``.
    """
    fit = fit_specification(ds, "quadratic", t_origin)
    return fit, fit.tech_path()


def fit_linear(ds: DerivedSeries, t_origin: int | None = None):
    """Linear technology path: regress on ``(1, t, b')``.

    Returns ``(RegressionResult, TechPath)``.
    """
    fit = fit_specification(ds, "linear", t_origin)
    return fit, fit.tech_path()


def predict_unemployment_growth(fit: RegressionResult, ds: DerivedSeries) -> np.ndarray:
    """Model ``U'/U`` per year: fitted ``dep_var`` plus ``n_t - b``.

    ``ds`` must cover exactly the years of the fit; its ``b_prime`` may be
    altered to read off counterfactual predictions.
    """
    if fit.spec is None:
        raise DomainError("prediction needs a fit produced by fit_linear or fit_quadratic")
    if fit.years is None or len(fit.years) != len(ds.year) or np.any(fit.years != ds.year):
        raise AlignmentError("derived series years do not match the fitted years")
    X, _ = design_matrix(ds, fit.spec, fit.t_origin)
    dep_hat = X @ fit.coefficients
    return dep_hat + ds.n_t - ds.b


def structural_product(fit: RegressionResult) -> float:
    """``sigma * labor_share * Y/K`` implied by the ``b'`` slope, ``-1/slope``.

    A positive slope contradicts the model; the value is still returned,
    with a :class:`SignWarning`.
    """
    slope = fit.slope if isinstance(fit, RegressionResult) else float(fit)
    if slope == 0.0:
        raise UndefinedProductError("slope on b_prime is zero")
    if slope > 0.0:
        warnings.warn(
            f"slope on b_prime is positive ({slope:.6g}); the model predicts a negative slope",
            SignWarning,
            stacklevel=2,
        )
    return -1.0 / slope
