"""Full-employment baseline: reduced-form capital dynamics per effective worker.

With labor demand equal to labor supply the whole model collapses to

    kd' = sigma * f(kd) - (a + n + delta) * kd,

plus the auxiliaries ``y = f(kd)``, ``r = f'(kd)``, ``w = f(kd) - f'(kd) kd``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IntegrationError, NoSteadyStateError
from .model_core import ModelParams

__all__ = [
    "DEFAULT_STEP",
    "SolowPath",
    "solow_rhs",
    "steady_state",
    "simulate_solow",
    "rk4_integrate",
]

DEFAULT_STEP = 0.01


def _tech_rate(a, t):
    return float(a(t)) if callable(a) else float(a)


@dataclass(frozen=True)
class SolowPath:
    """Simulated full-employment path sampled on a uniform time grid."""

    times: np.ndarray
    kd: np.ndarray
    y: np.ndarray
    r: np.ndarray
    w: np.ndarray

    def __len__(self):
        return len(self.times)

    @property
    def step(self) -> float:
        return float(self.times[1] - self.times[0]) if len(self.times) > 1 else 0.0

    def columns(self) -> dict:
        return {"time": self.times, "kd": self.kd, "y": self.y, "r": self.r, "w": self.w}


def solow_rhs(kd, params: ModelParams, a: float):
    """Time derivative of capital per effective worker.

    Parameters
    ----------
    kd : float or ndarray
        Capital per effective worker, strictly positive.
    params : ModelParams
    a : float
        Technology growth rate.

    Returns
    -------
    float or ndarray
        ``sigma * f(kd) - (a + n + delta) * kd``.
    """
    drag = a + params.laborforce_growth + params.depreciation
    if not drag > 0:
        raise DomainError(f"a + n + delta must be positive, got {drag}")
    y = params.production.output(kd)
    if np.ndim(kd) == 0:
        return params.sigma * y - drag * float(kd)
    return params.sigma * y - drag * np.asarray(kd, dtype=float)


def steady_state(params: ModelParams, a: float) -> float:
    """Balanced-growth capital per effective worker.

    Returns ``(sigma / (a + n + delta)) ** (1 / (1 - alpha))``.
    """
    drag = a + params.laborforce_growth + params.depreciation
    if not drag > 0:
        raise NoSteadyStateError(f"a + n + delta must be positive, got {drag}")
    if not params.sigma > 0:
        raise NoSteadyStateError(f"sigma must be positive, got {params.sigma}")
    return params.production.solve_average_product(drag / params.sigma)


def rk4_integrate(func, y0: float, t0: float, step: float, n_steps: int, check=None):
    """Classical fixed-step fourth-order Runge-Kutta for ``y' = func(t, y)``.

    ``check(t, y)`` is called after every step and may raise to abort.
    Returns ``(times, values)`` arrays of length ``n_steps + 1``.
    """
    times = t0 + step * np.arange(n_steps + 1)
    values = np.empty(n_steps + 1)
    values[0] = y = float(y0)
    half = 0.5 * step
    for i in range(n_steps):
        t = times[i]
        k1 = func(t, y)
        k2 = func(t + half, y + half * k1)
        k3 = func(t + half, y + half * k2)
        k4 = func(t + step, y + step * k3)
        y = y + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if check is not None:
            check(times[i + 1], y)
        values[i + 1] = y
    return times, values


def simulate_solow(
    kd0: float,
    params: ModelParams,
    a=0.02,
    horizon: float = 100.0,
    step: float = DEFAULT_STEP,
    t0: float = 0.0,
) -> SolowPath:
    """Integrate the full-employment dynamics forward from ``kd0``.

    ``a`` is either a constant technology growth rate or a callable
    ``a(t)`` such as a fitted :class:`~keynesgrowth.estimate.TechPath`;
    callables are evaluated at every Runge-Kutta stage.  The number of
    steps is ``round(horizon / step)``.
    """
    if not kd0 > 0:
        raise DomainError(f"kd0 must be positive, got {kd0}")
    if not step > 0:
        raise DomainError(f"step must be positive, got {step}")
    if not horizon >= step:
        raise DomainError(f"horizon must be >= step, got horizon={horizon}, step={step}")
    n_steps = int(round(horizon / step))
    if abs(n_steps * step - horizon) > 1e-9 * max(1.0, horizon):
        raise DomainError(f"horizon {horizon} is not a multiple of step {step}")

    sigma = params.sigma
    alpha = params.curvature
    base = params.laborforce_growth + params.depreciation

    def rhs(t, k):
        if k <= 0:
            raise IntegrationError(f"capital ratio became non-positive near t={t:g}", time=t)
        drag = _tech_rate(a, t) + base
        if not drag > 0:
            raise DomainError(f"a + n + delta must be positive, got {drag} at t={t:g}")
        return sigma * k**alpha - drag * k

    def check(t, k):
        if not (np.isfinite(k) and k > 0):
            raise IntegrationError(f"capital ratio became non-positive at t={t:g}", time=t)

    times, kd = rk4_integrate(rhs, kd0, t0, step, n_steps, check=check)
    f = params.production
    y = f.output(kd)
    r = f.rental(kd)
    w = y - r * kd
    return SolowPath(times=times, kd=kd, y=y, r=r, w=w)
