"""Command-line entry point.

    ximarkov <experiment> [--config path.json] [--seed S] [--samples N]
             [--grid M] [--out DIR]

Experiments: shuffle, additive-error, equicorrelated, t4d, dirac,
si-convergence, diagnostics.  The JSON config supplies keyword arguments of
the experiment runner; --seed/--samples/--grid override the corresponding
keys.  Exit codes: 0 success, 2 invalid configuration, 3 failed control
assertion.
"""

import argparse
import inspect
import json
import logging
import sys
from pathlib import Path

from ..errors import (ConfigError, ControlAssertionError,
                      InvalidParameterError)
from .emit import emit
from .experiments import EXPERIMENTS


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            config = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(config, dict):
        raise ConfigError(f"config {path} must contain a JSON object")
    return config


def _merge_config(runner, config: dict, args) -> dict:
    allowed = set(inspect.signature(runner).parameters)
    unknown = set(config) - allowed
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}; allowed: {sorted(allowed)}")
    overrides = {"seed": args.seed, "n": args.samples, "m": args.grid}
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in allowed:
            raise ConfigError(f"experiment {args.experiment!r} does not take --{key}")
        config[key] = value
    return config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ximarkov",
        description="Run dependence-measure experiments and emit CSV/SVG tables.")
    parser.add_argument("experiment", choices=sorted(EXPERIMENTS))
    parser.add_argument("--config", help="JSON file with runner parameters")
    parser.add_argument("--seed", type=int, help="master seed override")
    parser.add_argument("--samples", type=int, help="Monte Carlo sample count override")
    parser.add_argument("--grid", type=int, help="copula grid resolution override")
    parser.add_argument("--out", default="out", help="output directory (default ./out)")
    parser.add_argument("--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    runner = EXPERIMENTS[args.experiment]
    try:
        config = _merge_config(runner, _load_config(args.config), args)
        result = runner(**config)
    except (ConfigError, InvalidParameterError, TypeError, ValueError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    except ControlAssertionError as exc:
        print(f"control assertion failed: {exc}", file=sys.stderr)
        return 3

    out_dir = Path(args.out)
    csv_path = emit(result, "csv", out_dir / f"{result.name}.csv")
    svg_path = emit(result, "svg", out_dir / f"{result.name}.svg")
    controls = result.metadata.get("controls", [])
    print(f"{result.name}: {len(result.rows)} rows -> {csv_path}"
          + (f", {svg_path}" if svg_path else ""))
    for ctl in controls:
        print(f"  control {ctl['name']}: {'ok' if ctl['passed'] else 'FAILED'}")
    runtime = result.metadata.get("runtime_s")
    if runtime is not None:
        print(f"  runtime: {runtime:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
