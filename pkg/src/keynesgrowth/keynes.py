"""Growth with an exogenous capital path and a labor surplus.

The capital growth rate ``b = K'/K`` is taken as given.  Capital demand per
effective worker then solves

    (b + delta) * kd = sigma * f(kd),

and the unemployment measure ``U = Ls / Ld`` grows at

    U'/U = a + n - b + b' / (sigma * f'(kd) - (b + delta)).

Substituting the first condition into the second gives the share form
``a + n - b - b' / (sigma * labor_share * Y/K)`` used for estimation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoSolutionError, SingularityError
from .model_core import ModelParams
from .solow import SolowPath, solow_rhs

__all__ = [
    "CapitalGrowthPath",
    "KeynesPath",
    "solve_kd",
    "kd_growth",
    "unemployment_growth",
    "unemployment_growth_share_form",
    "reconstruct_unemployment",
    "unemployment_rate",
    "balanced_growth_path",
    "step_shock_path",
    "solow_capital_growth",
]


def _rate_at(value, t):
    if callable(value):
        return float(value(t))
    return float(value)


def _series_at(values, i):
    if np.ndim(values) == 0:
        return float(values)
    return float(values[i])


@dataclass(frozen=True)
class CapitalGrowthPath:
    """Exogenous capital growth rate ``b`` and its time derivative ``b'``.

    Use :meth:`from_rates` to derive ``b'`` from ``b`` by the backward
    difference ``(b[i] - b[i-1]) / (t[i] - t[i-1])`` with ``b'[0] = 0``.
    """

    times: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        if not (len(self.times) == len(self.b) == len(self.b_prime)):
            raise DomainError("times, b and b_prime must have equal length")
        if len(self.times) > 1 and np.any(np.diff(self.times) <= 0):
            raise DomainError("times must be strictly increasing")

    def __len__(self):
        return len(self.times)

    @classmethod
    def from_rates(cls, times, b) -> "CapitalGrowthPath":
        times = np.asarray(times, dtype=float)
        b = np.asarray(b, dtype=float)
        b_prime = np.zeros_like(b)
        if len(b) > 1:
            b_prime[1:] = np.diff(b) / np.diff(times)
        return cls(times=times, b=b, b_prime=b_prime)

    def check(self, params: ModelParams):
        bad = np.flatnonzero(self.b + params.depreciation <= 0)
        if bad.size:
            i = int(bad[0])
            raise NoSolutionError(
                f"b + delta <= 0 at index {i} (t={self.times[i]:g}); "
                "capital demand has no positive solution"
            )


@dataclass(frozen=True)
class KeynesPath:
    """Reconstructed path of the exogenous-capital model."""

    times: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray
    kd: np.ndarray
    U: np.ndarray
    dU_over_U: np.ndarray
    y: np.ndarray
    r: np.ndarray
    w: np.ndarray

    def __len__(self):
        return len(self.times)

    @property
    def unemployment_rate(self) -> np.ndarray:
        return unemployment_rate(self.U)

    def columns(self) -> dict:
        return {
            "time": self.times,
            "b": self.b,
            "b_prime": self.b_prime,
            "kd": self.kd,
            "U": self.U,
            "u": self.unemployment_rate,
            "dU_over_U": self.dU_over_U,
            "y": self.y,
            "r": self.r,
            "w": self.w,
        }


def unemployment_rate(U):
    """Conventional unemployment rate ``1 - 1/U`` (display only)."""
    return 1.0 - 1.0 / np.asarray(U, dtype=float)


def solve_kd(b: float, params: ModelParams) -> float:
    """Capital per effective worker consistent with capital growth ``b``.

    Solves ``(b + delta) * kd = sigma * f(kd)`` for its unique positive
    root; closed form under Cobb-Douglas.
    """
    lhs = b + params.depreciation
    if not lhs > 0:
        raise NoSolutionError(f"b + delta must be positive, got {lhs}")
    if not params.sigma > 0:
        raise NoSolutionError(f"sigma must be positive, got {params.sigma}")
    return params.production.solve_average_product(lhs / params.sigma)


def _denominator(b, kd, params):
    # sigma f'(kd) - (b + delta); negative for 0 < alpha < 1
    den = params.sigma * params.production.rental(kd) - (b + params.depreciation)
    if den == 0.0 or not np.isfinite(den):
        raise SingularityError(f"sigma*f'(kd) - (b + delta) vanished at b={b}")
    return den


def kd_growth(b: float, b_prime: float, params: ModelParams) -> float:
    """Growth rate of capital demand per effective worker, ``kd'/kd``."""
    kd = solve_kd(b, params)
    return b_prime / _denominator(b, kd, params)


def unemployment_growth(b: float, b_prime: float, a: float, params: ModelParams) -> float:
    """Growth rate of the unemployment measure, ``U'/U``.

    Parameters
    ----------
    b : float
        Capital growth rate ``K'/K``.
    b_prime : float
        Time derivative of ``b``.
    a : float
        Technology growth rate.
    params : ModelParams
        Supplies ``n``, ``delta``, ``sigma`` and the production curvature.
    """
    return a + params.laborforce_growth - b + kd_growth(b, b_prime, params)


def unemployment_growth_share_form(
    b: float,
    b_prime: float,
    a: float,
    n: float,
    sigma: float,
    labor_share: float,
    y_over_k: float,
) -> float:
    """``U'/U`` written with observable labor share and output/capital ratio.

    Returns ``a + n - b - b_prime / (sigma * labor_share * y_over_k)``.
    """
    if not sigma > 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    if not 0 < labor_share < 1:
        raise DomainError(f"labor_share must lie in (0, 1), got {labor_share}")
    if not y_over_k > 0:
        raise DomainError(f"y_over_k must be positive, got {y_over_k}")
    product = sigma * labor_share * y_over_k
    if product == 0.0:
        raise SingularityError("sigma * labor_share * y_over_k vanished")
    return a + n - b - b_prime / product


def reconstruct_unemployment(
    path: CapitalGrowthPath,
    U0: float,
    a_path,
    n_series,
    params: ModelParams,
) -> KeynesPath:
    """Cumulate ``U'/U`` along an exogenous capital-growth path.

    Parameters
    ----------
    path : CapitalGrowthPath
    U0 : float
        Unemployment measure at ``path.times[0]``.
    a_path : float or callable
        Technology growth rate, constant or evaluated as ``a_path(t)``.
    n_series : float or array_like
        Labor-force growth, constant or one value per node.
    params : ModelParams
        ``laborforce_growth`` is overridden node by node by ``n_series``.

    Notes
    -----
    ``U`` is stepped log-linearly, ``U[i+1] = U[i] * exp(g[i] * h[i])``, so
    ``U'/U`` is read as a continuous-time rate held over each interval.
    """
    if not U0 > 0:
        raise DomainError(f"U0 must be positive, got {U0}")
    m = len(path)
    if np.ndim(n_series) and len(n_series) != m:
        raise DomainError(f"n_series has length {len(n_series)}, path has {m}")
    f = params.production
    kd = np.empty(m)
    growth = np.empty(m)
    for i in range(m):
        t = path.times[i]
        b = float(path.b[i])
        try:
            kd[i] = solve_kd(b, params)
            kd_rate = kd_growth(b, float(path.b_prime[i]), params)
        except (NoSolutionError, SingularityError) as exc:
            raise type(exc)(f"step {i} (t={t:g}): {exc}") from exc
        growth[i] = _rate_at(a_path, t) + _series_at(n_series, i) - b + kd_rate

    U = np.empty(m)
    U[0] = U0
    if m > 1:
        h = np.diff(path.times)
        U[1:] = U0 * np.exp(np.cumsum(growth[:-1] * h))
    y = f.output(kd)
    r = f.rental(kd)
    w = y - r * kd
    return KeynesPath(
        times=np.asarray(path.times, dtype=float),
        b=np.asarray(path.b, dtype=float),
        b_prime=np.asarray(path.b_prime, dtype=float),
        kd=kd,
        U=U,
        dU_over_U=growth,
        y=y,
        r=r,
        w=w,
    )


def _grid(horizon, step):
    n = int(round(horizon / step))
    return step * np.arange(n + 1)


def balanced_growth_path(a: float, n: float, horizon: float, step: float = 1.0) -> CapitalGrowthPath:
    """Constant ``b = a + n`` with ``b' = 0``; keeps ``U`` constant."""
    times = _grid(horizon, step)
    b = np.full(times.shape, a + n)
    return CapitalGrowthPath(times=times, b=b, b_prime=np.zeros_like(b))


def step_shock_path(
    b_before: float,
    b_after: float,
    t_jump: float,
    horizon: float,
    step: float = 1.0,
) -> CapitalGrowthPath:
    """Capital growth that jumps once at ``t_jump``; ``b'`` by backward difference."""
    times = _grid(horizon, step)
    b = np.where(times < t_jump, b_before, b_after)
    return CapitalGrowthPath.from_rates(times, b)


def solow_capital_growth(path: SolowPath, params: ModelParams, a=0.02) -> CapitalGrowthPath:
    """Capital growth implied by a full-employment path.

    Along the full-employment path ``b = sigma * kd**(alpha-1) - delta``, and
    differentiating gives ``b' = sigma * (alpha-1) * kd**(alpha-1) * kd'/kd``
    with ``kd'`` from the reduced-form dynamics.  Feeding the result into
    :func:`reconstruct_unemployment` with the same ``a`` and ``n`` must hold
    ``U`` constant.
    """
    alpha = params.curvature
    avg = params.sigma * path.kd ** (alpha - 1.0)
    b = avg - params.depreciation
    rates = np.array([_rate_at(a, t) for t in path.times])
    kdot = np.array([solow_rhs(k, params, ai) for k, ai in zip(path.kd, rates)])
    b_prime = (alpha - 1.0) * avg * kdot / path.kd
    return CapitalGrowthPath(times=np.asarray(path.times, dtype=float), b=b, b_prime=b_prime)
