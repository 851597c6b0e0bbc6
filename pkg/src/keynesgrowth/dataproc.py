"""Annual macro series in, regression variables out.

Timing conventions
------------------
* Growth rates are forward log differences, ``ln v[t+1] - ln v[t]``, stamped
  at the earlier year ``t``.  This applies to the unemployment measure
  ``U = LF / EMP`` and to labor-force growth ``n``.
* The capital stock is a year-end stock.  The growth it records between the
  ends of years ``t-1`` and ``t`` happens during year ``t``, so capital
  growth ``b`` is stamped at the later year (``capital_timing="end-of-year"``).
  Pass ``capital_timing="aligned"`` to stamp it like every other series.
* ``b'`` is the backward difference ``b[t] - b[t-1]``, stamped at ``t``.

With data running 1947-2014 the default conventions give usable rows
1949-2013.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np
import pandas as pd

from .errors import AlignmentError, DomainError, LoadError

__all__ = [
    "ColumnMapping",
    "MacroSeries",
    "DerivedSeries",
    "DERIVED_COLUMNS",
    "load_csv",
    "load_derived_csv",
    "growth_rate",
    "first_difference",
    "build_derived",
]

GROWTH_METHODS = ("log", "arithmetic")
CAPITAL_TIMINGS = ("end-of-year", "aligned")

DERIVED_COLUMNS = (
    "year",
    "U",
    "dU_over_U",
    "b",
    "b_prime",
    "n_t",
    "dep_var",
    "time_index",
    "labor_share",
    "y_over_k",
)


@dataclass(frozen=True)
class ColumnMapping:
    """Names of the CSV columns holding each series."""

    year: str = "year"
    output: str = "output"
    capital: str = "capital"
    labor_force: str = "labor_force"
    employment: str = "employment"
    labor_share: str | None = "labor_share"

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class MacroSeries:
    """Validated annual levels, sorted by year with no gaps."""

    year: np.ndarray
    Y: np.ndarray
    K: np.ndarray
    LF: np.ndarray
    EMP: np.ndarray
    labor_share: np.ndarray | None = None

    def __post_init__(self):
        n = len(self.year)
        for name in ("Y", "K", "LF", "EMP", "labor_share"):
            value = getattr(self, name)
            if value is not None and len(value) != n:
                raise LoadError(f"column {name} has {len(value)} rows, expected {n}", column=name)
        _validate_levels(self)

    def __len__(self):
        return len(self.year)

    @property
    def U(self) -> np.ndarray:
        return self.LF / self.EMP


def _validate_levels(ms: MacroSeries):
    year = np.asarray(ms.year)
    if len(year) > 1:
        steps = np.diff(year)
        if np.any(steps <= 0):
            i = int(np.flatnonzero(steps <= 0)[0]) + 1
            raise LoadError(f"duplicate or unsorted year {year[i]}", row=int(year[i]), column="year")
        if np.any(steps != 1):
            i = int(np.flatnonzero(steps != 1)[0])
            missing = int(year[i]) + 1
            raise LoadError(f"gap in years: {missing} is missing", row=missing, column="year")
    for name in ("Y", "K", "LF", "EMP"):
        values = np.asarray(getattr(ms, name), dtype=float)
        bad = np.flatnonzero(~(values > 0) | ~np.isfinite(values))
        if bad.size:
            i = int(bad[0])
            raise LoadError(
                f"{name} must be positive, got {values[i]} in {year[i]}", row=int(year[i]), column=name
            )
    over = np.flatnonzero(np.asarray(ms.EMP) > np.asarray(ms.LF))
    if over.size:
        i = int(over[0])
        raise LoadError(
            f"employment exceeds labor force in {year[i]}", row=int(year[i]), column="EMP"
        )
    if ms.labor_share is not None:
        share = np.asarray(ms.labor_share, dtype=float)
        bad = np.flatnonzero(~((share > 0) & (share < 1)))
        if bad.size:
            i = int(bad[0])
            raise LoadError(
                f"labor_share must lie in (0, 1), got {share[i]} in {year[i]}",
                row=int(year[i]),
                column="labor_share",
            )


def _numeric_column(frame, column, years):
    values = pd.to_numeric(frame[column], errors="coerce")
    bad = values.isna()
    if bad.any():
        i = int(np.flatnonzero(bad.to_numpy())[0])
        raw = frame[column].iloc[i]
        row = years[i] if years is not None else i + 2
        raise LoadError(f"column {column!r}: cannot parse {raw!r} (row {row})", row=row, column=column)
    return values.to_numpy(dtype=float)


def load_csv(path, schema: ColumnMapping | None = None) -> MacroSeries:
    """Read a comma-delimited annual CSV into a :class:`MacroSeries`.

    The labor-share column is optional; every other mapped column must be
    present.  Rows are sorted by year before validation.
    """
    schema = schema or ColumnMapping()
    path = Path(path)
    if not path.exists():
        raise LoadError(f"no such file: {path}")
    try:
        frame = pd.read_csv(path, dtype=str, skipinitialspace=True, encoding="utf-8")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as exc:
        raise LoadError(f"cannot parse {path}: {exc}") from exc
    frame.columns = [c.strip() for c in frame.columns]

    required = [schema.year, schema.output, schema.capital, schema.labor_force, schema.employment]
    for column in required:
        if column not in frame.columns:
            raise LoadError(f"missing column {column!r} in {path}", column=column)

    year_raw = pd.to_numeric(frame[schema.year], errors="coerce")
    if year_raw.isna().any() or np.any(year_raw != np.round(year_raw)):
        i = int(np.flatnonzero((year_raw.isna() | (year_raw != np.round(year_raw))).to_numpy())[0])
        raise LoadError(
            f"column {schema.year!r}: bad year {frame[schema.year].iloc[i]!r} (line {i + 2})",
            row=i + 2,
            column=schema.year,
        )
    order = np.argsort(year_raw.to_numpy(), kind="stable")
    frame = frame.iloc[order].reset_index(drop=True)
    years = year_raw.to_numpy()[order].astype(int)

    share = None
    if schema.labor_share and schema.labor_share in frame.columns:
        share = _numeric_column(frame, schema.labor_share, years)
    return MacroSeries(
        year=years,
        Y=_numeric_column(frame, schema.output, years),
        K=_numeric_column(frame, schema.capital, years),
        LF=_numeric_column(frame, schema.labor_force, years),
        EMP=_numeric_column(frame, schema.employment, years),
        labor_share=share,
    )


def growth_rate(series, method: str = "log") -> np.ndarray:
    """Forward growth rate of a positive series, one element shorter.

    ``method="log"`` gives ``ln v[t+1] - ln v[t]``; ``"arithmetic"`` gives
    ``v[t+1] / v[t] - 1``.  Element ``t`` of the result belongs to the
    period of ``v[t]``.
    """
    values = np.asarray(series, dtype=float)
    if values.ndim != 1 or len(values) < 2:
        raise DomainError("growth_rate needs a 1-d series of length >= 2")
    if np.any(~(values > 0)) or not np.all(np.isfinite(values)):
        raise DomainError("growth_rate needs strictly positive finite values")
    if method == "log":
        return np.diff(np.log(values))
    if method == "arithmetic":
        return values[1:] / values[:-1] - 1.0
    raise DomainError(f"unknown growth method {method!r}; expected one of {GROWTH_METHODS}")


def first_difference(series) -> np.ndarray:
    """Backward difference ``x[t] - x[t-1]``, stamped at ``t`` (drops the first)."""
    values = np.asarray(series, dtype=float)
    if values.ndim != 1 or len(values) < 2:
        raise DomainError("first_difference needs a 1-d series of length >= 2")
    return values[1:] - values[:-1]


@dataclass(frozen=True)
class DerivedSeries:
    """Per-year regression variables.

    ``dep_var = dU_over_U - n_t + b`` row by row, and ``time_index`` counts
    years from the first usable row.
    """

    year: np.ndarray
    U: np.ndarray
    dU_over_U: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray
    n_t: np.ndarray
    dep_var: np.ndarray
    time_index: np.ndarray
    labor_share: np.ndarray
    y_over_k: np.ndarray
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.year)

    def columns(self) -> dict:
        return {name: getattr(self, name) for name in DERIVED_COLUMNS}

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.columns())

    def replace(self, **changes) -> "DerivedSeries":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return DerivedSeries(**values)


def build_derived(
    ms: MacroSeries,
    method: str = "log",
    capital_timing: str = "end-of-year",
) -> DerivedSeries:
    """Assemble the regression variables from annual levels."""
    if len(ms) < 4:
        raise DomainError(f"need at least 4 annual rows, got {len(ms)}")
    if capital_timing not in CAPITAL_TIMINGS:
        raise DomainError(f"unknown capital timing {capital_timing!r}; expected one of {CAPITAL_TIMINGS}")
    years = np.asarray(ms.year, dtype=int)
    N = len(years)
    U = ms.LF / ms.EMP

    du = growth_rate(U, method)  # stamped years[0 .. N-2]
    n_t = growth_rate(ms.LF, method)
    gk = growth_rate(ms.K, method)
    if capital_timing == "end-of-year":
        b_first = 1  # gk[j] is growth during year j + 1
    else:
        b_first = 0
    b_years = years[b_first : b_first + N - 1]
    bp = first_difference(gk)  # stamped b_years[1:]
    bp_years = b_years[1:]

    lo = max(years[0], b_years[0], bp_years[0])
    hi = min(years[N - 2], b_years[-1], bp_years[-1])
    if hi < lo:
        raise DomainError("no overlapping usable years")
    rows = np.arange(lo, hi + 1)

    def pick(stamp_years, values):
        start = int(lo - stamp_years[0])
        return values[start : start + len(rows)]

    dU = pick(years[: N - 1], du)
    n_sel = pick(years[: N - 1], n_t)
    b = pick(b_years, gk)
    b_prime = pick(bp_years, bp)
    level = slice(int(lo - years[0]), int(hi - years[0]) + 1)
    share = ms.labor_share[level] if ms.labor_share is not None else np.full(len(rows), np.nan)
    return DerivedSeries(
        year=rows,
        U=U[level],
        dU_over_U=dU,
        b=b,
        b_prime=b_prime,
        n_t=n_sel,
        dep_var=dU - n_sel + b,
        time_index=(rows - rows[0]).astype(float),
        labor_share=np.asarray(share, dtype=float),
        y_over_k=(ms.Y / ms.K)[level],
        meta={"method": method, "capital_timing": capital_timing},
    )


def load_derived_csv(path) -> DerivedSeries:
    """Read a CSV previously written from a :class:`DerivedSeries`."""
    path = Path(path)
    if not path.exists():
        raise LoadError(f"no such file: {path}")
    frame = pd.read_csv(path)
    for column in DERIVED_COLUMNS:
        if column not in frame.columns:
            raise LoadError(f"missing column {column!r} in {path}", column=column)
    values = {c: frame[c].to_numpy(dtype=float) for c in DERIVED_COLUMNS}
    years = values["year"]
    if np.any(years != np.round(years)):
        raise LoadError("non-integer year in derived file", column="year")
    values["year"] = years.astype(int)
    if len(years) > 1 and np.any(np.diff(years) != 1):
        raise AlignmentError("derived file years are not contiguous")
    recomputed = values["dU_over_U"] - values["n_t"] + values["b"]
    if not np.allclose(recomputed, values["dep_var"], rtol=0, atol=1e-10):
        raise AlignmentError("dep_var does not equal dU_over_U - n_t + b")
    return DerivedSeries(**values)

