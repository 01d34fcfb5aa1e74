"""Command-line front end: figure data, channel evolution tables, verification.

Subcommands emit machine-readable tables (CSV with 17-significant-digit
scientific notation, or JSON) plus a ``.meta.json`` sidecar recording the
full run configuration, so identical configurations reproduce byte-identical
outputs. Exit codes: 0 success, 1 verification failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__, gaussian, infotheory, verify
from .twolevel import PrepBias, TwoLevelHamiltonian, period, transition_probs
from .units import UnitMode, constants_for

USAGE_ERROR = 2


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's output, recorded in the sidecar."""

    subcommand: str
    units: str
    out: str
    format: str
    seed: int
    params: dict


def _format_cell(v: float) -> str:
    return f"{float(v):.16e}"


def _write_table(path: Path, columns: list[str], rows: list[tuple], fmt: str) -> None:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_format_cell(v) for v in row) for row in rows)
        path.write_text("\n".join(lines) + "\n")
    else:
        payload = {"columns": columns, "rows": [[float(v) for v in row] for row in rows]}
        path.write_text(json.dumps(payload, indent=1) + "\n")


def _write_meta(path: Path, config: RunConfig, columns: list[str]) -> None:
    meta = dataclasses.asdict(config)
    meta["columns"] = columns
    meta["artifact_version"] = __version__
    path.with_suffix(".meta.json").write_text(json.dumps(meta, indent=1, sort_keys=True) + "\n")


def _emit(args, columns: list[str], rows: list[tuple], params: dict) -> int:
    out = Path(args.out) if args.out else Path(f"{args.subcommand}.{args.format}")
    config = RunConfig(
        subcommand=args.subcommand,
        units=args.units,
        out=str(out),
        format=args.format,
        seed=args.seed,
        params=params,
    )
    _write_table(out, columns, rows, args.format)
    _write_meta(out, config, columns)
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def _constants(args):
    return constants_for(UnitMode(args.units))


def _cmd_fig_gaussian(args) -> int:
    """Capacity vs preparation precision, one curve per signal-to-threshold ratio."""
    if any(r < 0 for r in args.ratios):
        raise ValueError("ratios must be >= 0")
    if args.grid_points < 1 or args.grid_min <= 0 or args.grid_max < args.grid_min:
        raise ValueError("invalid precision grid")
    c = _constants(args)
    vstar = gaussian.optimal_sigma2(args.t, args.mass, c)
    grid = vstar * np.logspace(
        math.log10(args.grid_min), math.log10(args.grid_max), args.grid_points
    )
    rows = []
    for ratio in sorted(args.ratios):
        curve = gaussian.capacity_vs_precision_curve(args.t, args.mass, ratio * vstar, grid, c)
        rows.extend((u, ratio, cap) for u, cap in curve)
    return _emit(
        args,
        ["sigma2_over_vstar", "ratio", "capacity_nats"],
        rows,
        {
            "ratios": sorted(args.ratios),
            "t": args.t,
            "mass": args.mass,
            "grid_min": args.grid_min,
            "grid_max": args.grid_max,
            "grid_points": args.grid_points,
        },
    )


def _cmd_fig_two_level(args) -> int:
    """Two-level capacity over one oscillation period, one curve per gamma."""
    if args.units != "natural":
        raise ValueError("fig-two-level runs in natural units (use --units natural)")
    if not 0.0 <= args.r0 < 0.5:
        raise ValueError(f"r0 must lie in [0, 0.5), got {args.r0}")
    if any(g < 0 for g in args.gammas):
        raise ValueError("gamma values must be >= 0")
    if args.time_points < 2:
        raise ValueError("need at least 2 time points")
    c = _constants(args)
    r0 = PrepBias(args.r0)
    rows = []
    for gamma in sorted(args.gammas):
        eps = 2.0 / math.sqrt(gamma**2 + 4.0)
        h = TwoLevelHamiltonian(E=0.0, Delta=gamma * eps, epsilon=eps)
        t0 = period(h, c)
        for t in np.linspace(0.0, t0, args.time_points):
            cap = infotheory.two_level_capacity(h, r0, float(t), c, base="bits").capacity
            rows.append((gamma, float(t), cap))
    return _emit(
        args,
        ["gamma", "t", "capacity_bits"],
        rows,
        {"gammas": sorted(args.gammas), "r0": args.r0, "time_points": args.time_points},
    )


def _cmd_contour(args) -> int:
    """Capacity at the optimal preparation variance over a mass/delay grid."""
    if args.units != "si":
        raise ValueError("contour reports SI worked numbers (use --units si)")
    for name in ("mass_min", "mass_max", "t_min", "t_max"):
        if getattr(args, name) <= 0:
            raise ValueError(f"--{name.replace('_', '-')} must be positive")
    if args.p_constraint < 0:
        raise ValueError("--p-constraint must be >= 0")
    c = _constants(args)
    masses = np.logspace(math.log10(args.mass_min), math.log10(args.mass_max), args.mass_points)
    times = np.logspace(math.log10(args.t_min), math.log10(args.t_max), args.t_points)
    rows = []
    for m in masses:
        for t in times:
            vstar = gaussian.optimal_sigma2(float(t), float(m), c)
            prep = gaussian.GaussianPrep(x0=0.0, sigma2_A=vstar, mass=float(m))
            noise = gaussian.noise_variance(prep, float(t), c)
            rows.append((float(m), float(t), vstar, gaussian.capacity_nats(args.p_constraint, noise)))
    return _emit(
        args,
        ["mass", "t", "vstar", "capacity_nats"],
        rows,
        {
            "mass_min": args.mass_min,
            "mass_max": args.mass_max,
            "mass_points": args.mass_points,
            "t_min": args.t_min,
            "t_max": args.t_max,
            "t_points": args.t_points,
            "p_constraint": args.p_constraint,
        },
    )


def _cmd_evolve(args) -> int:
    """Raw time evolution: position densities or measurement probabilities."""
    if not args.times or any(t < 0 for t in args.times):
        raise ValueError("--times must list delays >= 0")
    c = _constants(args)
    times = sorted(args.times)
    if args.channel == "gaussian":
        prep = gaussian.GaussianPrep(x0=args.x0, sigma2_A=args.sigma2, mass=args.mass)
        width = 10.0 * math.sqrt(gaussian.noise_variance(prep, times[-1], c))
        x = np.linspace(prep.x0 - width, prep.x0 + width, args.grid_points)
        rows = []
        for t in times:
            rho = gaussian.density_at(prep, x, t, c)
            rows.extend((t, float(xi), float(ri)) for xi, ri in zip(x, rho))
        columns = ["t", "x", "density"]
        params = {
            "channel": "gaussian",
            "x0": args.x0,
            "sigma2": args.sigma2,
            "mass": args.mass,
            "times": times,
            "grid_points": args.grid_points,
        }
    else:
        eps = args.epsilon
        h = TwoLevelHamiltonian(E=0.0, Delta=args.gamma * eps, epsilon=eps)
        p = PrepBias(args.p)
        rows = []
        for t in times:
            prob0, prob1 = transition_probs(h, p, t, c)
            rows.append((t, prob0, prob1))
        columns = ["t", "prob0", "prob1"]
        params = {
            "channel": "two_level",
            "gamma": args.gamma,
            "epsilon": eps,
            "p": args.p,
            "times": times,
        }
    return _emit(args, columns, rows, params)


def _parse_tolerance_overrides(pairs: list[str]) -> dict[str, float]:
    overrides = {}
    for pair in pairs:
        name, _, value = pair.partition("=")
        if not value or name not in verify.DEFAULT_TOLERANCES:
            known = ", ".join(sorted(verify.DEFAULT_TOLERANCES))
            raise ValueError(f"--tolerance expects NAME=VALUE with NAME one of: {known}")
        overrides[name] = float(value)
    return overrides


def _cmd_verify(args) -> int:
    """Run the oracle-equivalence and invariant suites; exit 0 iff all pass."""
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    overrides = _parse_tolerance_overrides(args.tolerance)
    reports = verify.run_suite(args.suite, seed=args.seed, trials=args.trials, tolerances=overrides)
    payload = {
        "artifact_version": __version__,
        "suite": args.suite,
        "seed": args.seed,
        "trials": args.trials,
        "tolerance_overrides": overrides,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    for report in reports:
        for check in report.checks:
            status = "PASS" if check.passed else ("FINDING" if check.kind == "finding" else "FAIL")
            line = (
                f"[{report.suite}] {check.name}: {status} "
                f"(max deviation {check.max_deviation:.3e}, tolerance {check.tolerance:.3e})"
            )
            if check.details:
                line += f" - {check.details}"
            print(line)
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
        print(f"wrote report to {args.out}")
    if not payload["passed"]:
        failing = [c.name for r in reports for c in r.failing()]
        print(f"FAILED checks: {', '.join(failing)}", file=sys.stderr)
        return 1
    return 0


def _add_common(parser: argparse.ArgumentParser, default_units: str) -> None:
    parser.add_argument("--units", choices=["si", "natural"], default=default_units)
    parser.add_argument("--out", default=None, help="output path (default: <subcommand>.<format>)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--seed", type=int, default=42)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chancap",
        description="Capacity analysis of the particle-placement and two-level channels",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("fig-gaussian", help="capacity vs preparation precision curves")
    _add_common(p, "natural")
    p.add_argument("--ratios", type=float, nargs="+", default=[0.5, 5.0, 50.0],
                   help="signal-to-threshold ratios P/v*")
    p.add_argument("--t", type=float, default=1.0, help="measurement delay")
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--grid-min", type=float, default=1e-2, help="smallest sigma2/v*")
    p.add_argument("--grid-max", type=float, default=1e2, help="largest sigma2/v*")
    p.add_argument("--grid-points", type=int, default=401)
    p.set_defaults(handler=_cmd_fig_gaussian)

    p = sub.add_parser("fig-two-level", help="two-level capacity over one period")
    _add_common(p, "natural")
    p.add_argument("--gammas", type=float, nargs="+", default=[0.0, 1.0, 2.0, 4.0],
                   help="gap-to-tunneling ratios Delta/epsilon")
    p.add_argument("--r0", type=float, default=0.0, help="preparation bias in [0, 0.5)")
    p.add_argument("--time-points", type=int, default=501)
    p.set_defaults(handler=_cmd_fig_two_level)

    p = sub.add_parser("contour", help="capacity over a mass/delay grid at optimal precision")
    _add_common(p, "si")
    p.add_argument("--mass-min", type=float, default=1e-31)
    p.add_argument("--mass-max", type=float, default=1e-6)
    p.add_argument("--mass-points", type=int, default=201)
    p.add_argument("--t-min", type=float, default=1e-3)
    p.add_argument("--t-max", type=float, default=1e3)
    p.add_argument("--t-points", type=int, default=201)
    p.add_argument("--p-constraint", type=float, default=1.0,
                   help="placement second-moment bound P (m^2 in SI)")
    p.set_defaults(handler=_cmd_contour)

    p = sub.add_parser("evolve", help="raw densities or transition probabilities over time")
    _add_common(p, "natural")
    p.add_argument("--channel", choices=["gaussian", "two_level"], required=True)
    p.add_argument("--times", type=float, nargs="+", required=True)
    p.add_argument("--x0", type=float, default=0.0)
    p.add_argument("--sigma2", type=float, default=1.0)
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--grid-points", type=int, default=101)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--p", type=float, default=0.0, help="preparation bias")
    p.set_defaults(handler=_cmd_evolve)

    p = sub.add_parser("verify", help="run the verification suites")
    _add_common(p, "natural")
    p.add_argument("--suite", choices=[*verify.SUITES, "all"], default="all")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--tolerance", action="append", default=[], metavar="NAME=VALUE",
                   help="override a check tolerance (repeatable; harness self-test hook)")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
