"""Command-line entry point.

Subcommands map one to one onto the experiment operations; every run
writes CSV tables plus a manifest.json into the output directory and
prints a short summary with the key integers.  Exit codes: 0 success,
2 configuration problem, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__, config as cfgmod, sweeps
from .errors import ConfigError, NumericalError

SUBCOMMANDS = (
    "spectrum",
    "singulars",
    "winding",
    "winding-real",
    "static-winding",
    "phase-diagram",
    "boundaries",
    "disorder",
    "wipr",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floqssh",
        description="Driven non-Hermitian SSH chain: spectra, singular-value "
        "invariants, windings, disorder sweeps.",
        epilog="Config keys and defaults (override with --set key=value or "
        f"{cfgmod.ENV_PREFIX}section__key=value):\n" + cfgmod.describe_defaults(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"floqssh {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=f"run the {name.replace('-', ' ')} experiment")
        p.add_argument("--config", metavar="PATH", default=None,
                       help="TOML config or a previously written manifest.json")
        p.add_argument("--out", metavar="DIR", default=None, help="output directory")
        p.add_argument("--seed", metavar="N", type=int, default=None, help="master seed")
        p.add_argument("--workers", metavar="N", type=int, default=None, help="pool size")
        p.add_argument("--set", metavar="KEY=VALUE", action="append", default=[],
                       dest="overrides", help="dotted config override (repeatable)")
    return parser


def _resolve(args) -> dict:
    cfg = cfgmod.load_config(args.config)
    cfgmod.apply_env_overrides(cfg)
    cfgmod.apply_overrides(cfg, args.overrides)
    if args.seed is not None:
        cfg["disorder"]["seed"] = int(args.seed)
    if args.out is not None:
        cfg["output"]["directory"] = args.out
    if args.workers is not None:
        cfg["run"]["workers"] = int(args.workers)
    return cfg


def _fmt_winding(row: dict) -> str:
    if row["V1"] is None or row["V2"] is None:
        return f"f={row['f']:.4f} boundary ({row['flag']})"
    return f"f={row['f']:.4f} V1={row['V1']:+d} V2={row['V2']:+d}"


def _summarize(command: str, tables: dict, cfg: dict) -> str:
    if command in ("spectrum", "singulars"):
        rows = tables["winding"]
        parts = [_fmt_winding(r) for r in (rows[:2] + rows[-2:] if len(rows) > 4 else rows)]
        n_spec = len(tables["spectrum"])
        imax = max((abs(r["im_E"]) for r in tables["spectrum"]), default=0.0)
        return (
            f"{command}: {n_spec} quasienergies over {len(rows)} drive points, "
            f"max |Im E| = {imax:.3e}; windings {', '.join(parts)}"
        )
    if command in ("winding", "phase-diagram"):
        rows = tables["winding"]
        flagged = sum(1 for r in rows if r["flag"])
        combos = sorted({(r["V1"], r["V2"]) for r in rows if r["V1"] is not None})
        head = " ".join(_fmt_winding(r) for r in rows[:3])
        return (
            f"{command}: {len(rows)} grid points, {flagged} boundary-flagged; "
            f"(V1,V2) plateaus {combos}; {head}"
        )
    if command == "boundaries":
        rows = tables["boundaries"]
        locs = ", ".join(f"{r['gap_type']}@{r['value']:.4f}" for r in rows) or "none found"
        return f"boundaries: {locs}"
    if command in ("disorder", "wipr", "winding-real"):
        out = []
        if "disorder" in tables:
            for row in tables["disorder"]:
                if row["realization"] == -1:
                    out.append(
                        f"d={row['d']}: dev0={row['zero_mode_dev']:.3e} "
                        f"devpi={row['pi_mode_dev']:.3e} wipr={row['wipr']:+.3f}"
                    )
        if "realspace_winding" in tables:
            vals = sorted({(r["sign"], r["value"]) for r in tables["realspace_winding"]})
            out.append(f"ring windings {vals}")
        return f"{command}: " + "; ".join(out)
    if command == "static-winding":
        row = tables["static_winding"][0]
        return (
            f"static-winding: unit-circle {row['bloch']:+d} (raw {row['bloch_raw']:+.4f}), "
            f"non-Bloch {row['gbz']:+d} (raw {row['gbz_raw']:+.4f})"
        )
    return command  # pragma: no cover


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve(args)
        workers = cfg["run"]["workers"]
        sweep_cfg = cfgmod.build_sweep_config(cfg, diagram=(args.command == "phase-diagram"))
        if args.command == "spectrum" or args.command == "singulars":
            tables = sweeps.f_sweep(sweep_cfg, workers)
        elif args.command == "winding":
            tables = sweeps.f_sweep(sweep_cfg, workers, parts=("winding",))
        elif args.command == "phase-diagram":
            tables = sweeps.phase_diagram(sweep_cfg, workers)
        elif args.command == "boundaries":
            tables = sweeps.boundary_trace(sweep_cfg, workers)
        elif args.command == "disorder":
            tables = sweeps.disorder_sweep(sweep_cfg, workers)
        elif args.command == "wipr":
            tables = sweeps.disorder_sweep(sweep_cfg, workers, parts=("modes",))
        elif args.command == "winding-real":
            tables = sweeps.disorder_sweep(sweep_cfg, workers, parts=("rings",))
        elif args.command == "static-winding":
            tables = sweeps.static_winding(sweep_cfg, workers)
        else:  # pragma: no cover
            parser.error(f"unhandled command {args.command}")
        manifest = {
            "command": args.command,
            "config": cfg,
            "master_seed": cfg["disorder"]["seed"],
        }
        paths = sweeps.write_outputs(tables, sweep_cfg.outdir, manifest)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"{args.command} failed numerically: {exc}", file=sys.stderr)
        return 3
    print(_summarize(args.command, tables, cfg))
    print(f"wrote {len(paths)} files to {sweep_cfg.outdir}")
    return 0


def main() -> None:  # console entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
