"""Command-line front end.

Commands: simulate, sweep, coin-check, hopfield, classical. Exit codes:
0 success, 2 configuration error, 3 numerical-diagnostics error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .config import load_hopfield, load_scenario, load_sweep
from .constants import MAX_DT
from .errors import ConfigurationError, IntegrationDiagnosticsError
from .experiments import (
    run_classical,
    run_coin_check,
    run_hopfield,
    run_simulate,
    run_sweep,
)

__all__ = ["build_parser", "main", "app"]


def _add_common(sub: argparse.ArgumentParser, with_config: bool = True) -> None:
    if with_config:
        sub.add_argument("config", help="path to a JSON config file")
    sub.add_argument("--out", help="output directory (default: config 'out' or '.')")
    sub.add_argument("--svg", action="store_true", help="also write an SVG sketch")
    sub.add_argument("--seed", type=int, help="override the config random seed")
    sub.add_argument("--dt", type=float, help="override the integrator step")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patternwalks",
        description=(
            "Quantum and classical walks on neural firing-pattern hypercubes "
            "with sink-based associative memory."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("simulate", help="evolve one walk scenario"))
    _add_common(sub.add_parser("sweep", help="mixing time over a strength grid"))
    coin = sub.add_parser("coin-check", help="coin unitarity report")
    coin.add_argument("--grid", help="comma-separated bias values in [0, 1]")
    coin.add_argument("--out", help="output directory (default '.')")
    _add_common(sub.add_parser("hopfield", help="classical retrieval baseline"))
    _add_common(sub.add_parser("classical", help="classical chain over the jump graph"))
    return parser


def _apply_overrides(cfg, args):
    changes = {}
    if args.seed is not None:
        if args.seed < 0:
            raise ConfigurationError(f"--seed: must be >= 0, got {args.seed}")
        changes["seed"] = args.seed
    if args.dt is not None:
        if not 0 < args.dt <= MAX_DT:
            raise ConfigurationError(f"--dt: must lie in (0, {MAX_DT}], got {args.dt}")
        changes["dt"] = args.dt
    return dataclasses.replace(cfg, **changes) if changes else cfg


def _parse_grid(text: str | None):
    if text is None:
        return None
    values = []
    for item in text.split(","):
        try:
            p = float(item)
        except ValueError as exc:
            raise ConfigurationError(f"--grid: {item!r} is not a number") from exc
        if not 0.0 <= p <= 1.0:
            raise ConfigurationError(f"--grid: {p} outside [0, 1]")
        values.append(p)
    if not values:
        raise ConfigurationError("--grid: at least one value required")
    return values


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate":
            cfg = _apply_overrides(load_scenario(args.config), args)
            paths = run_simulate(cfg, out_dir=args.out, svg=args.svg).paths
        elif args.command == "sweep":
            grid = load_sweep(args.config)
            grid = dataclasses.replace(grid, base=_apply_overrides(grid.base, args))
            paths = run_sweep(grid, out_dir=args.out, svg=args.svg).paths
        elif args.command == "coin-check":
            _, paths = run_coin_check(_parse_grid(args.grid), out_dir=args.out)
        elif args.command == "hopfield":
            cfg = _apply_overrides(load_hopfield(args.config), args)
            _, paths = run_hopfield(cfg, out_dir=args.out)
        else:  # classical
            cfg = _apply_overrides(load_scenario(args.config), args)
            paths = run_classical(cfg, out_dir=args.out).paths
    except ConfigurationError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except IntegrationDiagnosticsError as exc:
        print(f"integration diagnostics: {exc}", file=sys.stderr)
        return 3
    for path in paths:
        print(path)
    return 0


def app() -> None:
    sys.exit(main())
