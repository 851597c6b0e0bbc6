"""Shared domain types and the intensive-form production identities.

Every quantity here is measured per effective worker, i.e. per unit of
``A * L``.  Technology levels never appear; the technology growth rate lives
in :class:`keynesgrowth.estimate.TechPath` or is passed as a plain float.
"""

from __future__ import annotations

import abc
import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoSolutionError

__all__ = [
    "ModelParams",
    "ProductionFunction",
    "CobbDouglas",
    "IntensiveState",
    "intensive_output",
    "intensive_rental",
    "intensive_wage",
    "bisect_root",
]


def _check_positive(kd, name="kd"):
    arr = np.asarray(kd, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise DomainError(f"{name} must be finite and strictly positive, got {kd!r}")
    return arr


def _scalar_or_array(value):
    # keep python floats for scalar input so callers get plain numbers back
    if np.ndim(value) == 0:
        return float(value)
    return value


@dataclass(frozen=True)
class ModelParams:
    """Structural rates of the model economy.

    Parameters
    ----------
    saving_rate : float
        Fraction of real income saved by households.
    tax_rate : float
        Taxes as a fraction of real income.
    gov_rate : float
        Government purchases as a fraction of real income.
    netexport_rate : float
        Net exports as a fraction of real income.
    depreciation : float
        Capital depreciation rate per year.
    laborforce_growth : float
        Growth rate of the labor supply per year.
    curvature : float
        Cobb-Douglas capital exponent, ``0 < curvature < 1``.

    Notes
    -----
    The defaults give a composite accumulation rate ``sigma = 0.18``.
    Construction fails with :class:`DomainError` if ``sigma <= 0``.
    """

    saving_rate: float = 0.20
    tax_rate: float = 0.18
    gov_rate: float = 0.19
    netexport_rate: float = 0.01
    depreciation: float = 0.05
    laborforce_growth: float = 0.01
    curvature: float = 0.3

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not np.isfinite(value):
                raise DomainError(f"{field.name} must be finite, got {value!r}")
        if not 0.0 < self.curvature < 1.0:
            raise DomainError(f"curvature must lie in (0, 1), got {self.curvature}")
        if self.depreciation < 0.0:
            raise DomainError(f"depreciation must be >= 0, got {self.depreciation}")
        for name in ("saving_rate", "tax_rate", "gov_rate", "netexport_rate"):
            value = getattr(self, name)
            if not -1.0 < value < 1.0:
                raise DomainError(f"{name} must lie in (-1, 1), got {value}")
        if self.sigma <= 0.0:
            raise DomainError(
                "saving_rate + tax_rate - gov_rate - netexport_rate must be "
                f"positive, got {self.sigma}"
            )

    @property
    def sigma(self) -> float:
        """Composite rate ``s + tax - g - x`` at which output becomes capital."""
        return self.saving_rate + self.tax_rate - self.gov_rate - self.netexport_rate

    @property
    def production(self) -> "CobbDouglas":
        return CobbDouglas(self.curvature)

    def replace(self, **changes) -> "ModelParams":
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


class ProductionFunction(abc.ABC):
    """Intensive form ``f(k) = F(1, k)`` of a constant-returns technology.

    Subclasses provide :meth:`output` and :meth:`rental`; the wage follows
    from the constant-returns (Euler) split of output.
    """

    @abc.abstractmethod
    def output(self, kd):
        """Output per effective worker."""

    @abc.abstractmethod
    def rental(self, kd):
        """Marginal product of capital ``f'(kd)``."""

    def wage(self, kd):
        """Real wage per effective worker, ``f(kd) - f'(kd) * kd``."""
        kd = _scalar_or_array(_check_positive(kd))
        return self.output(kd) - self.rental(kd) * kd

    def solve_average_product(self, ratio: float) -> float:
        """Return the ``k > 0`` with ``f(k) / k == ratio``.

        The generic version brackets the root and bisects; it relies on the
        average product being strictly decreasing.
        """
        if not ratio > 0:
            raise NoSolutionError(f"average product must be positive, got {ratio}")
        return bisect_root(lambda k: ratio * k - self.output(k), 1e-8, 1e8)


@dataclass(frozen=True)
class CobbDouglas(ProductionFunction):
    """``f(k) = k ** alpha``."""

    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")

    def output(self, kd):
        kd = _check_positive(kd)
        return _scalar_or_array(kd**self.alpha)

    def rental(self, kd):
        kd = _check_positive(kd)
        return _scalar_or_array(self.alpha * kd ** (self.alpha - 1.0))

    def solve_average_product(self, ratio: float) -> float:
        if not ratio > 0:
            raise NoSolutionError(f"average product must be positive, got {ratio}")
        # k**(alpha-1) == ratio
        return float(ratio ** (1.0 / (self.alpha - 1.0)))


def intensive_output(kd, alpha):
    """Output per effective worker ``y = kd ** alpha``.

    Accepts scalars or arrays; raises :class:`DomainError` for ``kd <= 0``.
    """
    return CobbDouglas(alpha).output(kd)


def intensive_rental(kd, alpha):
    """Real rental rate ``r = alpha * kd ** (alpha - 1)``."""
    return CobbDouglas(alpha).rental(kd)


def intensive_wage(kd, alpha):
    """Real wage ``w = y - r * kd``, equal to ``(1 - alpha) * kd ** alpha``."""
    return CobbDouglas(alpha).wage(kd)


@dataclass(frozen=True)
class IntensiveState:
    """Capital per effective worker on the demand and supply side.

    ``kd = K / (A * Ld)`` and ``ks = K / (A * Ls)``.  The unemployment
    measure ``U = Ls / Ld`` equals ``kd / ks``.
    """

    kd: float
    ks: float

    def __post_init__(self):
        _check_positive(self.kd, "kd")
        _check_positive(self.ks, "ks")

    @property
    def U(self) -> float:
        return self.kd / self.ks

    @classmethod
    def from_unemployment(cls, kd: float, U: float) -> "IntensiveState":
        _check_positive(U, "U")
        return cls(kd=kd, ks=kd / U)


def bisect_root(func, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 400) -> float:
    """Root of a continuous scalar function on a sign-changing bracket.

    Bisection runs until the bracket width falls below ``tol * max(1, |x|)``.
    Raises :class:`NoSolutionError` if ``func(lo)`` and ``func(hi)`` share a
    sign.
    """
    flo, fhi = func(lo), func(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise NoSolutionError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = func(mid)
        if fmid == 0.0:
            return mid
        if np.sign(fmid) == np.sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo <= tol * max(1.0, abs(mid)):
            break
    return 0.5 * (lo + hi)
