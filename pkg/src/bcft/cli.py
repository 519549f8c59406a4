"""Command line interface.

Four subcommands cover the package surface:

    bcft transform --signal gaussian --grid-axis a1 --from -1 --to 1 --steps 3
    bcft transform --signal rect --param a=1 --point 0,0,0,0
    bcft roc --alpha 1 --beta 1 --point 0,0,0,0
    bcft roc --alpha 1 --beta 3 --polygon
    bcft verify --check linearity
    bcft catalog --name gaussian

Frequencies are written as four unit coefficients ``a0,a1,a2,a3`` or, with
--idempotent, as the projection pair ``re1,im1,re2,im2``.  Numeric output
carries 17 significant digits and runs are byte-deterministic for a fixed
seed.  Exit codes: 0 on success, 1 for usage or configuration problems,
2 when any evaluated point or check fails.
"""

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np

from bcft.bicomplex import Bicomplex, from_idempotent, from_units
from bcft.engine import QuadratureConfig, grid_csv, transform_grid
from bcft.properties import DEFAULT_SEED, run_suite, suite_json
from bcft.roc import ConvergenceRegion, polygon_csv
from bcft.signals import catalog_json, make

_AXES = ("a0", "a1", "a2", "a3")
_CONFIG_KEYS = {"abs_tol": float, "tail_tol": float, "jobs": int, "seed": int}


class UsageError(Exception):
    """Bad arguments or configuration; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; here that code is
    # reserved for data-level failures
    def error(self, message):
        raise UsageError(message)


def _parse_floats(text: str, n: int, what: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise UsageError(f"{what} needs {n} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"could not parse {what} {text!r}") from None


def _point(text: str) -> Bicomplex:
    return from_units(*_parse_floats(text, 4, "point"))


def _idempotent_point(text: str) -> Bicomplex:
    re1, im1, re2, im2 = _parse_floats(text, 4, "idempotent point")
    return from_idempotent((complex(re1, im1), complex(re2, im2)))


def _params(items: Optional[Sequence[str]]) -> dict:
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects name=value, got {item!r}")
        try:
            out[key] = float(value)
        except ValueError:
            raise UsageError(f"parameter {key!r} has non-numeric value {value!r}") from None
    return out


def _load_config(path: Optional[str]) -> dict:
    if path is None:
        return {}
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise UsageError("config file must hold a JSON object")
    out = {}
    for key, value in raw.items():
        if key not in _CONFIG_KEYS:
            raise UsageError(f"unknown config key {key!r}")
        try:
            out[key] = _CONFIG_KEYS[key](value)
        except (TypeError, ValueError):
            raise UsageError(f"config key {key!r} has invalid value {value!r}") from None
    return out


def _settings(args) -> tuple[QuadratureConfig, bool, int, int]:
    """Quadrature config (and whether tolerances were given explicitly),
    worker count and seed; flags beat config file."""
    config = _load_config(args.config)

    def pick(flag, key, default):
        return flag if flag is not None else config.get(key, default)

    tols_given = (
        args.abs_tol is not None
        or args.tail_tol is not None
        or "abs_tol" in config
        or "tail_tol" in config
    )
    try:
        cfg = QuadratureConfig(
            abs_tol=pick(args.abs_tol, "abs_tol", 1e-10),
            tail_tol=pick(args.tail_tol, "tail_tol", 1e-12),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    jobs = pick(args.jobs, "jobs", 1)
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return cfg, tols_given, jobs, pick(args.seed, "seed", DEFAULT_SEED)


def _read_points_file(path: str) -> list[Bicomplex]:
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read points file: {exc}") from None
    points = []
    for line in lines:
        line = line.strip()
        if not line or line == "a0,a1,a2,a3":
            continue
        points.append(_point(line))
    if not points:
        raise UsageError(f"points file {path!r} holds no points")
    return points


def cmd_transform(args, cfg: QuadratureConfig, jobs: int) -> int:
    try:
        signal = make(args.signal, **_params(args.param))
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None

    grid_flags = [args.grid_axis, args.grid_from, args.grid_to, args.steps]
    if any(v is not None for v in grid_flags):
        if any(v is None for v in grid_flags):
            raise UsageError("--grid-axis needs --from, --to and --steps")
        if args.point or args.points_file or args.idempotent:
            raise UsageError("give either a grid or explicit points, not both")
        if args.steps < 1:
            raise UsageError("--steps must be at least 1")
        axis = _AXES.index(args.grid_axis)
        points = []
        for value in np.linspace(args.grid_from, args.grid_to, args.steps):
            coeffs = [0.0, 0.0, 0.0, 0.0]
            coeffs[axis] = float(value)
            points.append(from_units(*coeffs))
    else:
        points = [_point(p) for p in args.point or ()]
        points += [_idempotent_point(p) for p in args.idempotent or ()]
        if args.points_file:
            points += _read_points_file(args.points_file)
        if not points:
            raise UsageError("no frequencies given; use --point, --points-file or --grid-axis")

    results = transform_grid(signal, points, cfg, jobs)
    sys.stdout.write(grid_csv(results))
    return 0 if all(p.status == "ok" for p in results) else 2


def cmd_roc(args) -> int:
    try:
        region = ConvergenceRegion(args.alpha, args.beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.polygon and args.point:
        raise UsageError("give either --polygon or --point, not both")
    if args.polygon:
        try:
            sys.stdout.write(polygon_csv(region))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return 0
    if not args.point:
        raise UsageError("nothing to do; use --point or --polygon")
    all_inside = True
    for text in args.point:
        w = _point(text)
        inside = region.contains_units(w)
        all_inside &= inside
        word = "inside" if inside else "outside"
        sys.stdout.write(f"{word} margin={region.margin(w):.17g}\n")
    return 0 if all_inside else 2


def cmd_verify(args, cfg: Optional[QuadratureConfig], seed: int) -> int:
    """None config keeps each check's own quadrature defaults."""
    try:
        reports = run_suite(checks=args.check, signals=args.signal, seed=seed, cfg=cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(suite_json(reports))
    return 0 if all(r.passed for r in reports) else 2


def cmd_catalog(args) -> int:
    if args.name is None:
        sys.stdout.write(catalog_json() + "\n")
        return 0
    try:
        signal = make(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(json.dumps(signal.describe(), indent=2) + "\n")
    return 0


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--abs-tol", type=float, default=None, help="quadrature target per component")
    common.add_argument("--tail-tol", type=float, default=None, help="truncation budget per component")
    common.add_argument("--jobs", type=int, default=None, help="worker threads for grids")
    common.add_argument("--seed", type=int, default=None, help="seed for the verify suite")
    common.add_argument("--config", default=None, help="JSON file mirroring the global flags")

    parser = _Parser(prog="bcft", description="Bicomplex Fourier transforms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("transform", parents=[common], help="evaluate a signal's transform")
    p.add_argument("--signal", required=True, help="catalog signal name")
    p.add_argument("--param", action="append", metavar="NAME=VALUE", help="signal parameter")
    p.add_argument("--point", action="append", metavar="A0,A1,A2,A3", help="frequency point")
    p.add_argument("--idempotent", action="append", metavar="RE1,IM1,RE2,IM2",
                   help="frequency as a projection pair")
    p.add_argument("--points-file", help="file with one point per line")
    p.add_argument("--grid-axis", choices=_AXES, help="sweep one unit coefficient")
    p.add_argument("--from", dest="grid_from", type=float, help="grid start")
    p.add_argument("--to", dest="grid_to", type=float, help="grid end")
    p.add_argument("--steps", type=int, help="grid point count")

    p = sub.add_parser("roc", parents=[common], help="query a region of convergence")
    p.add_argument("--alpha", type=float, required=True, help="right decay rate")
    p.add_argument("--beta", type=float, required=True, help="left decay rate (inf allowed)")
    p.add_argument("--point", action="append", metavar="A0,A1,A2,A3", help="membership query")
    p.add_argument("--polygon", action="store_true", help="print the a1/a2 cross-section")

    p = sub.add_parser("verify", parents=[common], help="run the transform identity suite")
    p.add_argument("--check", action="append", help="restrict to one check")
    p.add_argument("--signal", action="append", help="restrict to one signal")

    p = sub.add_parser("catalog", parents=[common], help="list built-in signals")
    p.add_argument("--name", help="describe a single signal")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg, tols_given, jobs, seed = _settings(args)
        if args.command == "transform":
            return cmd_transform(args, cfg, jobs)
        if args.command == "roc":
            return cmd_roc(args)
        if args.command == "verify":
            return cmd_verify(args, cfg if tols_given else None, seed)
        return cmd_catalog(args)
    except UsageError as exc:
        print(f"bcft: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
