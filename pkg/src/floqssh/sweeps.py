"""Experiment orchestration: parameter sweeps, disorder averaging, persistence.

Every sweep is a pure function of its configuration; grid points and
disorder realizations are independent work items evaluated through a
pool with results collected by index, so output never depends on
completion order.  Output tables are lists of dicts with fixed column
sets (see SCHEMAS) and are written as CSV plus a JSON run manifest that
can be fed back in as a config to reproduce the data byte for byte.
"""

from __future__ import annotations

import datetime
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .errors import GapClosedError, NumericalError
from .floquet import quasienergies, realspace_evolution
from .invariants import (
    MINUS,
    PLUS,
    momentum_winding,
    realspace_winding,
    singular_spectrum,
    winding_bloch_static,
    winding_gbz_static,
)
from .model import (
    ALL_PAIRS,
    OPEN,
    PERIODIC,
    DisorderSpec,
    DriveProtocol,
    ModelParams,
    sample_disorder,
)
from .observables import StateSet, wipr

SCHEMA_VERSION = 1

SCHEMAS = {
    "spectrum": ["f", "w", "L", "boundary", "index", "re_E", "im_E"],
    "singulars": ["f", "w", "L", "sign", "index", "s"],
    "winding": ["f", "w", "V1_raw", "V1", "V2_raw", "V2", "flag"],
    "realspace_winding": ["d", "realization", "sign", "raw", "value"],
    "disorder": ["d", "realization", "zero_mode_dev", "pi_mode_dev", "wipr"],
    "boundaries": ["axis", "value", "gap_type"],
    "static_winding": ["w", "gamma", "v", "bloch_raw", "bloch", "gbz_raw", "gbz"],
}


@dataclass(frozen=True)
class SweepAxis:
    name: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("axis needs at least one step")

    def values(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepConfig:
    model: ModelParams
    drive: DriveProtocol
    axis: SweepAxis
    axis2: SweepAxis | None = None
    disorder_strengths: tuple[float, ...] = (0.0, 0.05, 0.1, 0.2, 0.3)
    realizations: int = 50
    master_seed: int = 20240817
    disorder_range: str = ALL_PAIRS
    sizes: tuple[int, ...] = (20, 40, 60, 80)
    outdir: str = "out"

    def __post_init__(self):
        if self.realizations < 1:
            raise ValueError("realizations must be >= 1")


def run_indexed(fn, items, workers: int = 1) -> list:
    """Evaluate fn over items, results returned in item order regardless of pool."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _mode_deviations(energies: np.ndarray, period: float) -> tuple[float, float]:
    """Distances of the closest states to quasienergy 0 and to the zone edge.

    Both are complex-plane moduli: |E| for the zero mode and
    |(|Re E| - pi/T) + i Im E| for the pi/T mode.
    """
    zero_dev = float(np.min(np.abs(energies)))
    pi_dev = float(
        np.min(np.abs((np.abs(energies.real) - np.pi / period) + 1j * energies.imag))
    )
    return zero_dev, pi_dev


def _winding_row(params: ModelParams, drive: DriveProtocol, f: float, w: float) -> dict:
    row = {"f": f, "w": w, "V1_raw": None, "V1": None, "V2_raw": None, "V2": None, "flag": ""}
    flags = []
    for sign, raw_key, val_key in ((MINUS, "V1_raw", "V1"), (PLUS, "V2_raw", "V2")):
        try:
            res = momentum_winding(params, drive, sign)
            row[raw_key] = res.raw
            row[val_key] = res.value
            if res.max_step_phase >= np.pi / 2:
                flags.append(f"coarse_{sign}")
        except GapClosedError as exc:
            flags.append(f"gap_closed_{sign}(k={exc.where:.4f})")
    row["flag"] = ";".join(flags)
    return row


def f_sweep(
    config: SweepConfig,
    workers: int = 1,
    parts: tuple[str, ...] = ("spectrum", "singulars", "winding"),
) -> dict[str, list[dict]]:
    """Quasienergies, singular spectra and momentum windings along the f axis.

    ``parts`` restricts which tables are computed (the open-chain
    diagonalization dominates the cost and is skipped for winding-only
    sweeps).
    """
    if config.axis.name != "f":
        raise ValueError(f"f_sweep sweeps 'f', config axis is {config.axis.name!r}")
    unknown = set(parts) - {"spectrum", "singulars", "winding"}
    if unknown:
        raise ValueError(f"unknown f_sweep parts: {sorted(unknown)}")
    fs = config.axis.values()
    model = config.model

    def one(f: float):
        drive = DriveProtocol(f=float(f), q=config.drive.q, t1=config.drive.t1, t2=config.drive.t2)
        spectrum_rows = []
        singular_rows = []
        if "spectrum" in parts or "singulars" in parts:
            op = realspace_evolution(model, drive)
            if "spectrum" in parts:
                spec = quasienergies(op)
                spectrum_rows = [
                    {
                        "f": float(f),
                        "w": model.w,
                        "L": model.cells,
                        "boundary": model.boundary,
                        "index": n,
                        "re_E": float(spec.energies[n].real),
                        "im_E": float(spec.energies[n].imag),
                    }
                    for n in range(len(spec))
                ]
            if "singulars" in parts:
                for sign in (MINUS, PLUS):
                    sp = singular_spectrum(op, sign)
                    singular_rows.extend(
                        {
                            "f": float(f),
                            "w": model.w,
                            "L": model.cells,
                            "sign": sign,
                            "index": n,
                            "s": float(sp.values[n]),
                        }
                        for n in range(len(sp.values))
                    )
        winding_row = (
            _winding_row(model, drive, float(f), model.w) if "winding" in parts else None
        )
        return spectrum_rows, singular_rows, winding_row

    results = run_indexed(one, fs, workers)
    tables = {name: [] for name in parts}
    for spectrum_rows, singular_rows, winding_row in results:
        if "spectrum" in parts:
            tables["spectrum"].extend(spectrum_rows)
        if "singulars" in parts:
            tables["singulars"].extend(singular_rows)
        if "winding" in parts:
            tables["winding"].append(winding_row)
    return tables


def disorder_sweep(
    config: SweepConfig,
    workers: int = 1,
    parts: tuple[str, ...] = ("modes", "rings"),
) -> dict[str, list[dict]]:
    """Edge-mode drift, skin-effect strength and ring windings under disorder.

    Mode tracking runs on the open chain, the real-space winding on the
    ring, both with the same disorder matrix per realization.  A row
    with realization = -1 carries the disorder average for each d.
    """
    unknown = set(parts) - {"modes", "rings"}
    if unknown:
        raise ValueError(f"unknown disorder_sweep parts: {sorted(unknown)}")
    model_obc = ModelParams(config.model.w, config.model.gamma, config.model.v,
                            config.model.cells, OPEN)
    model_pbc = ModelParams(config.model.w, config.model.gamma, config.model.v,
                            config.model.cells, PERIODIC)
    drive = config.drive
    work = [(d, r) for d in config.disorder_strengths for r in range(config.realizations)]

    def one(item):
        d, r = item
        spec_d = DisorderSpec(d, config.master_seed, r, config.disorder_range)
        dH = sample_disorder(spec_d, config.model.cells)
        dev_row = None
        if "modes" in parts:
            op = realspace_evolution(model_obc, drive, dH)
            qspec = quasienergies(op)
            zero_dev, pi_dev = _mode_deviations(qspec.energies, drive.period)
            w_val = wipr(StateSet.from_spectrum(qspec))
            dev_row = {
                "d": d,
                "realization": r,
                "zero_mode_dev": zero_dev,
                "pi_mode_dev": pi_dev,
                "wipr": w_val,
            }
        ring_rows = []
        if "rings" in parts:
            ring = realspace_evolution(model_pbc, drive, dH)
            for sign in (MINUS, PLUS):
                res = realspace_winding(ring, sign)
                ring_rows.append(
                    {"d": d, "realization": r, "sign": sign, "raw": res.raw, "value": res.value}
                )
        return dev_row, ring_rows

    results = run_indexed(one, work, workers)
    tables: dict[str, list[dict]] = {}
    if "modes" in parts:
        disorder_rows = [dev for dev, _ in results]
        averaged = []
        for d in config.disorder_strengths:
            rows = [row for row in disorder_rows if row["d"] == d]
            averaged.append(
                {
                    "d": d,
                    "realization": -1,
                    "zero_mode_dev": float(np.mean([r["zero_mode_dev"] for r in rows])),
                    "pi_mode_dev": float(np.mean([r["pi_mode_dev"] for r in rows])),
                    "wipr": float(np.mean([r["wipr"] for r in rows])),
                }
            )
        tables["disorder"] = disorder_rows + averaged
    if "rings" in parts:
        tables["realspace_winding"] = [row for _, rows in results for row in rows]
    return tables


def phase_diagram(config: SweepConfig, workers: int = 1) -> dict[str, list[dict]]:
    """Momentum windings over a two-axis grid; closed gaps become flags."""
    if config.axis2 is None:
        raise ValueError("phase_diagram needs two swept axes")
    names = {config.axis.name, config.axis2.name}
    if names != {"f", "w"}:
        raise ValueError(f"phase_diagram sweeps f and w, got {sorted(names)}")
    f_axis = config.axis if config.axis.name == "f" else config.axis2
    w_axis = config.axis2 if config.axis.name == "f" else config.axis
    grid = [(float(f), float(w)) for f in f_axis.values() for w in w_axis.values()]

    def one(point):
        f, w = point
        model = ModelParams(w, config.model.gamma, config.model.v, config.model.cells,
                            config.model.boundary)
        drive = DriveProtocol(f=f, q=config.drive.q, t1=config.drive.t1, t2=config.drive.t2)
        return _winding_row(model, drive, f, w)

    return {"winding": run_indexed(one, grid, workers)}


def boundary_trace(config: SweepConfig, workers: int = 1, tol: float = 1e-4) -> dict[str, list[dict]]:
    """Locate gap-closing parameter values along the swept axis by bisection.

    The integer winding is the bracket predicate: it is constant inside
    a phase and jumps exactly where the tracked determinant develops a
    zero, so bisecting on a winding change converges to the band
    touching.  Brackets without a winding change report nothing.
    """
    if config.axis.name not in ("f", "w"):
        raise ValueError("boundary_trace sweeps 'f' or 'w'")
    values = config.axis.values()
    if len(values) < 2:
        raise ValueError("boundary_trace needs at least two axis points")

    def make_point(x: float):
        if config.axis.name == "f":
            model = config.model
            drive = DriveProtocol(f=float(x), q=config.drive.q, t1=config.drive.t1,
                                  t2=config.drive.t2)
        else:
            model = ModelParams(float(x), config.model.gamma, config.model.v,
                                config.model.cells, config.model.boundary)
            drive = config.drive
        return model, drive

    def winding_or_none(x: float, sign: str):
        model, drive = make_point(x)
        try:
            return momentum_winding(model, drive, sign).value
        except GapClosedError:
            return None

    rows = []
    for sign, gap_type in ((MINUS, "zero"), (PLUS, "pi")):
        coarse = run_indexed(lambda x, s=sign: winding_or_none(x, s), values, workers)
        for i in range(len(values) - 1):
            left, right = coarse[i], coarse[i + 1]
            if left is None or right is None:
                # landed on (or numerically at) a closing: report the point itself
                x_bad = values[i] if left is None else values[i + 1]
                rows.append({"axis": config.axis.name, "value": float(x_bad), "gap_type": gap_type})
                continue
            if left == right:
                continue
            lo, hi = float(values[i]), float(values[i + 1])
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                w_mid = winding_or_none(mid, sign)
                if w_mid is None:
                    lo = hi = mid
                    break
                if w_mid == left:
                    lo = mid
                else:
                    hi = mid
            rows.append(
                {"axis": config.axis.name, "value": 0.5 * (lo + hi), "gap_type": gap_type}
            )
    rows.sort(key=lambda r: (r["value"], r["gap_type"]))
    return {"boundaries": rows}


def static_winding(config: SweepConfig, workers: int = 1) -> dict[str, list[dict]]:
    """Static chain windings, unit-circle and non-Bloch contour."""
    model = config.model
    bloch = winding_bloch_static(model)
    gbz = winding_gbz_static(model)
    row = {
        "w": model.w,
        "gamma": model.gamma,
        "v": model.v,
        "bloch_raw": bloch.raw,
        "bloch": bloch.value,
        "gbz_raw": gbz.raw,
        "gbz": gbz.value,
    }
    return {"static_winding": [row]}


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def write_outputs(tables: dict[str, list[dict]], directory: str, manifest: dict) -> list[str]:
    """Write one CSV per table plus manifest.json; returns the paths written.

    Headers are fixed by SCHEMAS; an empty table produces a header-only
    file.  Floats are rendered with shortest round-trip repr so reruns
    of identical computations give identical bytes.
    """
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name, rows in tables.items():
        if name not in SCHEMAS:
            raise ValueError(f"unknown table {name!r}")
        header = SCHEMAS[name]
        path = os.path.join(directory, f"{name}.csv")
        try:
            with open(path, "w", newline="") as fh:
                fh.write(",".join(header) + "\n")
                for row in rows:
                    fh.write(",".join(_fmt(row.get(col)) for col in header) + "\n")
        except OSError as exc:
            raise NumericalError(f"cannot write {path}: {exc}") from exc
        paths.append(path)
    mpath = os.path.join(directory, "manifest.json")
    payload = dict(manifest)
    payload.setdefault("schema_version", SCHEMA_VERSION)
    payload.setdefault("floqssh_version", __version__)
    payload.setdefault("created_utc", datetime.datetime.now(datetime.timezone.utc).isoformat())
    try:
        with open(mpath, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise NumericalError(f"cannot write {mpath}: {exc}") from exc
    paths.append(mpath)
    return paths
