"""Command-line front end.

Every subcommand renders all of its outputs in memory, then writes them
(each through a temporary file and a rename) together with a
``manifest.json`` echoing the resolved configuration.  Exit status is 0 on
success, 1 for invalid input and 2 for numerical failures.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import sys
from pathlib import Path

import pandas as pd

from . import __version__
from ._io import csv_text, json_text, write_all
from .dataproc import ColumnMapping, build_derived, load_csv, load_derived_csv
from .errors import LoadError, ModelError, NumericError, ValidationError
from .estimate import fit_linear, fit_quadratic, predict_unemployment_growth
from .keynes import (
    CapitalGrowthPath,
    balanced_growth_path,
    reconstruct_unemployment,
    solow_capital_growth,
    step_shock_path,
)
from .model_core import ModelParams
from .report import report_dict, report_text, tech_path_columns
from .solow import DEFAULT_STEP, simulate_solow, steady_state
from .synthetic import LINEAR_COEFFICIENTS, synthetic_macro_series

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERIC = 0, 1, 2
DEFAULT_A = 0.03
DEFAULT_U0 = 1.05


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _u64(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def _common_parser():
    defaults = ModelParams()
    common = argparse.ArgumentParser(add_help=False)
    io = common.add_argument_group("input/output")
    io.add_argument("--input", type=Path, help="input CSV")
    io.add_argument("--output", type=Path, default=Path("keynesgrowth-out"), help="output directory")
    cols = common.add_argument_group("column mapping")
    mapping = ColumnMapping()
    cols.add_argument("--col-year", default=mapping.year)
    cols.add_argument("--col-output", default=mapping.output)
    cols.add_argument("--col-capital", default=mapping.capital)
    cols.add_argument("--col-laborforce", default=mapping.labor_force)
    cols.add_argument("--col-employment", default=mapping.employment)
    cols.add_argument("--col-laborshare", default=mapping.labor_share)
    params = common.add_argument_group("model parameters")
    params.add_argument("--alpha", type=float, default=defaults.curvature)
    params.add_argument("--s", type=float, default=defaults.saving_rate)
    params.add_argument("--tax", type=float, default=defaults.tax_rate)
    params.add_argument("--g", type=float, default=defaults.gov_rate)
    params.add_argument("--x", type=float, default=defaults.netexport_rate)
    params.add_argument("--delta", type=float, default=defaults.depreciation)
    params.add_argument("--n", type=float, default=defaults.laborforce_growth)
    run = common.add_argument_group("run")
    run.add_argument("--step", type=float, default=DEFAULT_STEP, help="integration step in years")
    run.add_argument("--t-origin", type=int, default=None, help="calendar year where t = 0")
    run.add_argument("--seed", type=_u64, default=0)
    return common


def build_parser():
    common = _common_parser()
    parser = _Parser(prog="keynesgrowth", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("steady-state", parents=[common], help="balanced-growth capital ratio")
    p.add_argument("--a", type=float, default=DEFAULT_A, help="technology growth rate")

    p = sub.add_parser("simulate-solow", parents=[common], help="full-employment path")
    p.add_argument("--a", type=float, default=DEFAULT_A)
    p.add_argument("--kd0", type=float, default=None, help="initial kd (default: half the steady state)")
    p.add_argument("--horizon", type=float, default=100.0)

    p = sub.add_parser("simulate-keynes", parents=[common], help="exogenous-capital scenario")
    p.add_argument("--scenario", choices=("balanced", "step", "solow"), default="step")
    p.add_argument("--scenario-file", type=Path, default=None, help="CSV with time,b[,b_prime]")
    p.add_argument("--a", type=float, default=DEFAULT_A)
    p.add_argument("--U0", type=float, default=DEFAULT_U0)
    p.add_argument("--horizon", type=float, default=60.0)
    p.add_argument("--b-before", type=float, default=0.04)
    p.add_argument("--b-after", type=float, default=0.05)
    p.add_argument("--t-jump", type=float, default=10.0)
    p.add_argument("--kd0", type=float, default=None, help="initial kd for the solow scenario")

    p = sub.add_parser("derive", parents=[common], help="regression variables from annual data")
    _derive_options(p)

    p = sub.add_parser("estimate", parents=[common], help="fit linear and quadratic specifications")
    _derive_options(p)
    p.add_argument("--derived", type=Path, default=None, help="previously derived CSV")
    p.add_argument(
        "--synthetic", action="store_true", help="estimate on a generated 1947-2014 dataset"
    )
    p.add_argument("--noise", type=float, default=0.0, help="noise scale for --synthetic")

    p = sub.add_parser("reconstruct", parents=[common], help="unemployment path from a b-path")
    _derive_options(p)
    p.add_argument("--scenario-file", type=Path, default=None, help="CSV with time,b[,b_prime]")
    p.add_argument("--spec", choices=("linear", "quadratic"), default="linear")
    p.add_argument("--a", type=float, default=None, help="constant a (default: fitted a(t))")
    p.add_argument("--U0", type=float, default=None)
    return parser


def _derive_options(p):
    p.add_argument("--growth", choices=("log", "arithmetic"), default="log")
    p.add_argument("--capital-timing", choices=("end-of-year", "aligned"), default="end-of-year")


def _params(args) -> ModelParams:
    return ModelParams(
        saving_rate=args.s,
        tax_rate=args.tax,
        gov_rate=args.g,
        netexport_rate=args.x,
        depreciation=args.delta,
        laborforce_growth=args.n,
        curvature=args.alpha,
    )


def _mapping(args) -> ColumnMapping:
    return ColumnMapping(
        year=args.col_year,
        output=args.col_output,
        capital=args.col_capital,
        labor_force=args.col_laborforce,
        employment=args.col_employment,
        labor_share=args.col_laborshare,
    )


def _config(args) -> dict:
    config = {}
    for key, value in sorted(vars(args).items()):
        if isinstance(value, Path):
            value = str(value)
        config[key] = value
    return config


def _manifest(args, outputs) -> str:
    body = json_text(
        {
            "command": args.command,
            "config": _config(args),
            "params": _params(args).as_dict(),
            "outputs": sorted(Path(p).name for p in outputs),
            "version": __version__,
        }
    )
    stamp = _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()
    # timestamp on its own line so runs differ only there
    return body.rstrip("\n")[:-1].rstrip() + f',\n  "created": "{stamp}"\n}}\n'


def _finish(args, files: dict):
    files = {args.output / name: text for name, text in files.items()}
    files[args.output / "manifest.json"] = _manifest(args, list(files))
    write_all(files)
    return sorted(files)


def _require_input(args):
    if args.input is None:
        raise ValidationError("--input is required")
    return args.input


def _derived_from_args(args):
    ms = load_csv(_require_input(args), _mapping(args))
    return build_derived(ms, method=args.growth, capital_timing=args.capital_timing)


def _load_scenario(path: Path) -> CapitalGrowthPath:
    if not path.exists():
        raise LoadError(f"no such file: {path}")
    frame = pd.read_csv(path)
    for column in ("time", "b"):
        if column not in frame.columns:
            raise LoadError(f"scenario file lacks column {column!r}", column=column)
    try:
        times = frame["time"].to_numpy(dtype=float)
        b = frame["b"].to_numpy(dtype=float)
        if "b_prime" in frame.columns:
            return CapitalGrowthPath(times, b, frame["b_prime"].to_numpy(dtype=float))
    except ValueError as exc:
        raise LoadError(f"scenario file {path}: {exc}") from exc
    return CapitalGrowthPath.from_rates(times, b)


def cmd_steady_state(args):
    params = _params(args)
    k = steady_state(params, args.a)
    f = params.production
    result = {"a": args.a, "kd": k, "y": f.output(k), "r": f.rental(k), "w": f.wage(k)}
    text = json_text(result)
    print(text, end="")
    return _finish(args, {"steady_state.json": text})


def cmd_simulate_solow(args):
    params = _params(args)
    kd0 = args.kd0 if args.kd0 is not None else 0.5 * steady_state(params, args.a)
    args.kd0 = kd0
    path = simulate_solow(kd0, params, a=args.a, horizon=args.horizon, step=args.step)
    return _finish(args, {"solow_path.csv": csv_text(path.columns())})


def cmd_simulate_keynes(args):
    params = _params(args)
    step = args.step
    if args.scenario_file is not None:
        path = _load_scenario(args.scenario_file)
    elif args.scenario == "balanced":
        path = balanced_growth_path(args.a, params.laborforce_growth, args.horizon, step)
    elif args.scenario == "step":
        path = step_shock_path(args.b_before, args.b_after, args.t_jump, args.horizon, step)
    else:
        kd0 = args.kd0 if args.kd0 is not None else 0.5 * steady_state(params, args.a)
        args.kd0 = kd0
        solow = simulate_solow(kd0, params, a=args.a, horizon=args.horizon, step=step)
        path = solow_capital_growth(solow, params, a=args.a)
    path.check(params)
    result = reconstruct_unemployment(path, args.U0, args.a, params.laborforce_growth, params)
    return _finish(args, {"keynes_path.csv": csv_text(result.columns())})


def cmd_derive(args):
    ds = _derived_from_args(args)
    return _finish(args, {"derived.csv": csv_text(ds.columns())})


def _estimation_input(args):
    if args.synthetic:
        ms = synthetic_macro_series(LINEAR_COEFFICIENTS, noise=args.noise, seed=args.seed)
        return build_derived(ms, method=args.growth, capital_timing="end-of-year"), ms
    if args.derived is not None:
        return load_derived_csv(args.derived), None
    return _derived_from_args(args), None


def cmd_estimate(args):
    ds, ms = _estimation_input(args)
    quad, _ = fit_quadratic(ds, args.t_origin)
    lin, _ = fit_linear(ds, args.t_origin)
    fits = {"quadratic": quad, "linear": lin}
    predicted = {
        "year": ds.year,
        "actual_dU_over_U": ds.dU_over_U,
        "predicted_quadratic": predict_unemployment_growth(quad, ds),
        "predicted_linear": predict_unemployment_growth(lin, ds),
    }
    files = {
        "report_quadratic.txt": report_text(quad),
        "report_quadratic.json": json_text(report_dict(quad)),
        "report_linear.txt": report_text(lin),
        "report_linear.json": json_text(report_dict(lin)),
        "tech_paths.csv": csv_text(tech_path_columns(fits, ds.year)),
        "unemployment_growth_fit.csv": csv_text(predicted),
    }
    if ms is not None:
        files["derived.csv"] = csv_text(ds.columns())
    print(report_text(lin), end="")
    return _finish(args, files)


def cmd_reconstruct(args):
    params = _params(args)
    if args.scenario_file is not None:
        path = _load_scenario(args.scenario_file)
        a = args.a if args.a is not None else DEFAULT_A
        n = params.laborforce_growth
        U0 = args.U0 if args.U0 is not None else DEFAULT_U0
        extra = {}
    else:
        ds = _derived_from_args(args)
        fit, tech = (fit_linear if args.spec == "linear" else fit_quadratic)(ds, args.t_origin)
        origin = fit.t_origin
        times = (ds.year - origin).astype(float)
        path = CapitalGrowthPath(times=times, b=ds.b, b_prime=ds.b_prime)
        a = args.a if args.a is not None else tech
        n = ds.n_t
        U0 = args.U0 if args.U0 is not None else float(ds.U[0])
        extra = {"year": ds.year, "U_observed": ds.U}
    path.check(params)
    result = reconstruct_unemployment(path, U0, a, n, params)
    columns = dict(extra)
    columns.update(result.columns())
    return _finish(args, {"reconstruct.csv": csv_text(columns)})


COMMANDS = {
    "steady-state": cmd_steady_state,
    "simulate-solow": cmd_simulate_solow,
    "simulate-keynes": cmd_simulate_keynes,
    "derive": cmd_derive,
    "estimate": cmd_estimate,
    "reconstruct": cmd_reconstruct,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"keynesgrowth {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NumericError, ArithmeticError) as exc:
        print(f"keynesgrowth {args.command}: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ModelError as exc:
        print(f"keynesgrowth {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
