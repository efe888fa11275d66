"""Command-line front end.

Commands: spectrum, simulate, analytic, mixing-sweep, validate. File
outputs are byte-stable for a fixed build and configuration. Exit codes:
0 success, 1 validation-suite failure, 2 bad parameters, 3 integrator
failure, 4 every sweep point failed.
"""

from __future__ import annotations

import argparse
import itertools
import sys

import numpy as np

from . import io, validate
from .dephasing import DEFAULT_DT, IntegrationError, IntegratorControl, delta_state, sample_trajectory
from .graph import LricSpec, full_spectrum
from .large_gamma import analytic_distribution
from .mixing import FailedPoint, sandwich_check

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BAD_PARAMS = 2
EXIT_INTEGRATOR = 3
EXIT_SWEEP_FAILED = 4


def _time_grid(t_max: float, dt: float) -> np.ndarray:
    if t_max < 0:
        raise ValueError(f"t-max must be nonnegative, got {t_max}")
    if t_max == 0:
        return np.array([0.0])
    times = np.arange(0.0, t_max + 0.5 * dt, dt)
    if t_max - times[-1] > 0.25 * dt:
        times = np.append(times, t_max)
    return times


def _emit(args, content: str):
    if args.output:
        io.write_text(args.output, content)
    else:
        sys.stdout.write(content)


def cmd_spectrum(args) -> int:
    spec = LricSpec(args.n, args.m)
    spectrum = full_spectrum(spec)
    fmt = args.format or ("csv" if args.output else "table")
    if fmt == "json":
        _emit(args, io.spectrum_json(spectrum))
    elif fmt == "csv":
        _emit(args, io.spectrum_csv(spectrum))
    else:
        lines = [f"{'n':>4} {'theta':>20} {'energy':>20}"]
        for n, (theta, energy) in enumerate(zip(spectrum.mode_angles, spectrum.eigenvalues)):
            lines.append(f"{n:>4d} {theta:>20.16g} {energy:>20.16g}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_simulate(args) -> int:
    spec = LricSpec(args.n, args.m)
    control = IntegratorControl(dt=args.dt)
    times = _time_grid(args.t_max, args.dt)
    traj = sample_trajectory(delta_state(args.n, args.start), spec, args.gamma, times, control)
    content = io.trajectory_json(traj) if args.format == "json" else io.trajectory_csv(traj)
    _emit(args, content)
    return EXIT_OK


def cmd_analytic(args) -> int:
    spec = LricSpec(args.n, args.m)
    if args.gamma <= 0:
        raise ValueError(f"the closed form needs gamma > 0, got {args.gamma}")
    times = _time_grid(args.t_max, args.dt)
    traj = analytic_distribution(spec, args.gamma, times, args.start)
    content = io.trajectory_json(traj) if args.format == "json" else io.trajectory_csv(traj)
    _emit(args, content)
    return EXIT_OK


def _parse_grid(text: str | None, cast):
    if text is None:
        return None
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    return [cast(piece) for piece in items] or None


def _read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def cmd_mixing_sweep(args) -> int:
    config = _read_config(args.config) if args.config else {}

    def grid(flag_value, key, cast):
        parsed = _parse_grid(flag_value, cast)
        if parsed is not None:
            return parsed
        return _parse_grid(config.get(key), cast)

    ns = grid(args.n, "n", int)
    ms = grid(args.m, "m", int)
    gammas = grid(args.gamma, "gamma", float)
    epsilons = grid(args.epsilon, "epsilon", float)
    if not ns or not ms or not gammas or not epsilons:
        raise ValueError("empty sweep grid: need values for n, m, gamma and epsilon")
    source = args.source or config.get("source", "auto")
    horizon = args.t_max if args.t_max is not None else (
        float(config["t_max"]) if "t_max" in config else None
    )
    control = IntegratorControl(dt=args.dt) if args.dt is not None else None

    rows = []
    for n, m, g, eps in itertools.product(sorted(ns), sorted(ms), sorted(gammas), sorted(epsilons)):
        try:
            spec = LricSpec(n, m)
            rows.append(sandwich_check(spec, g, eps, horizon=horizon, source=source, control=control))
        except Exception as exc:  # recorded in-row, the sweep keeps going
            rows.append(FailedPoint(n, m, g, eps, str(exc)))
    content = io.sweep_json(rows) if args.format == "json" else io.sweep_csv(rows)
    _emit(args, content)
    if all(isinstance(r, FailedPoint) for r in rows):
        return EXIT_SWEEP_FAILED
    return EXIT_OK


def cmd_validate(args) -> int:
    results = validate.run_all(quick=args.quick)
    for r in results:
        print(f"{r.name}: {'PASS' if r.passed else 'FAIL'}  ({r.detail})")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lricwalk",
        description="Quantum walks on long-range interacting cycles under dephasing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p, default_format=None):
        p.add_argument("--output", help="output file (default: stdout)")
        p.add_argument("--format", choices=["csv", "json"], default=default_format)

    p_spec = sub.add_parser("spectrum", help="closed-form eigenvalues of G(N, m)")
    p_spec.add_argument("--n", type=int, required=True)
    p_spec.add_argument("--m", type=int, required=True)
    add_output_flags(p_spec)
    p_spec.set_defaults(func=cmd_spectrum)

    p_sim = sub.add_parser("simulate", help="integrate the dephasing master equation")
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--m", type=int, required=True)
    p_sim.add_argument("--gamma", type=float, required=True)
    p_sim.add_argument("--t-max", type=float, required=True)
    p_sim.add_argument("--dt", type=float, default=DEFAULT_DT)
    p_sim.add_argument("--start", type=int, default=0)
    add_output_flags(p_sim, "csv")
    p_sim.set_defaults(func=cmd_simulate)

    p_ana = sub.add_parser("analytic", help="closed-form strong-dephasing distribution")
    p_ana.add_argument("--n", type=int, required=True)
    p_ana.add_argument("--m", type=int, required=True)
    p_ana.add_argument("--gamma", type=float, required=True)
    p_ana.add_argument("--t-max", type=float, required=True)
    p_ana.add_argument("--dt", type=float, default=DEFAULT_DT, help="sample spacing")
    p_ana.add_argument("--start", type=int, default=0)
    add_output_flags(p_ana, "csv")
    p_ana.set_defaults(func=cmd_analytic)

    p_sweep = sub.add_parser("mixing-sweep", help="mixing times and bounds over a parameter grid")
    p_sweep.add_argument("--n", help="comma-separated list")
    p_sweep.add_argument("--m", help="comma-separated list")
    p_sweep.add_argument("--gamma", help="comma-separated list")
    p_sweep.add_argument("--epsilon", help="comma-separated list")
    p_sweep.add_argument("--source", choices=["sim", "analytic"])
    p_sweep.add_argument("--t-max", type=float, help="simulation horizon override")
    p_sweep.add_argument("--dt", type=float, help="integrator step override")
    p_sweep.add_argument("--config", help="flat key = value file; flags take precedence")
    add_output_flags(p_sweep, "csv")
    p_sweep.set_defaults(func=cmd_mixing_sweep)

    p_val = sub.add_parser("validate", help="run the built-in correctness checks")
    p_val.add_argument("--quick", action="store_true", help="small-N subset, under a minute")
    p_val.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IntegrationError as exc:
        print(f"integrator failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRATOR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
