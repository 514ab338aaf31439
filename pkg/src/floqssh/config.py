"""Configuration loading: TOML file, dotted-path overrides, manifest replay.

The configuration is a two-level tree of sections and scalar (or list)
values.  Unknown keys are rejected by name.  A previously written
manifest.json can be passed wherever a config file is accepted; its
embedded config echo is used, which is how reruns reproduce earlier
data exactly.
"""

from __future__ import annotations

import copy
import json
import os

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
    import tomli as tomllib

from .errors import ConfigError
from .model import ALL_PAIRS, NEAREST_NEIGHBOR, OPEN, PERIODIC, DriveProtocol, ModelParams
from .sweeps import SweepAxis, SweepConfig

DEFAULTS: dict = {
    "model": {"w": 1.0, "gamma": 1.5, "v": 1.0, "cells": 25, "boundary": OPEN},
    "drive": {"f": 1.0, "q": 2.0, "t1": 0.7, "t2": 0.7},
    "sweep": {"axis": "f", "start": 0.0, "stop": 1.1, "steps": 111},
    "diagram": {
        "f_start": 0.0,
        "f_stop": 1.2,
        "f_steps": 61,
        "w_start": 0.2,
        "w_stop": 1.5,
        "w_steps": 61,
    },
    "disorder": {
        "strengths": [0.0, 0.05, 0.1, 0.2, 0.3],
        "realizations": 50,
        "seed": 20240817,
        "range": ALL_PAIRS,
    },
    "scaling": {"sizes": [20, 40, 60, 80]},
    "output": {"directory": "out"},
    "run": {"workers": 1},
}

# bare-key shortcuts accepted by --set and the environment override hook
ALIASES = {
    "f": "drive.f",
    "q": "drive.q",
    "t1": "drive.t1",
    "t2": "drive.t2",
    "w": "model.w",
    "gamma": "model.gamma",
    "v": "model.v",
    "cells": "model.cells",
    "boundary": "model.boundary",
    "seed": "disorder.seed",
    "workers": "run.workers",
}

ENV_PREFIX = "FLOQSSH_SET_"


def default_config() -> dict:
    return copy.deepcopy(DEFAULTS)


def _merge_checked(base: dict, incoming: dict, path: str = "") -> None:
    for key, value in incoming.items():
        where = f"{path}{key}"
        if key not in base:
            raise ConfigError(f"unknown config key: {where}")
        if isinstance(base[key], dict):
            if not isinstance(value, dict):
                raise ConfigError(f"config key {where} must be a section")
            _merge_checked(base[key], value, where + ".")
        else:
            base[key] = _coerce(where, value, base[key])


def _coerce(where: str, value, default):
    if isinstance(default, bool):
        if isinstance(value, bool):
            return value
        raise ConfigError(f"config key {where} expects a boolean")
    if isinstance(default, int) and not isinstance(default, bool):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"config key {where} expects an integer")
        if float(value) != int(value):
            raise ConfigError(f"config key {where} expects an integer, got {value}")
        return int(value)
    if isinstance(default, float):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"config key {where} expects a number")
        return float(value)
    if isinstance(default, str):
        if not isinstance(value, str):
            raise ConfigError(f"config key {where} expects a string")
        return value
    if isinstance(default, list):
        if not isinstance(value, list):
            raise ConfigError(f"config key {where} expects a list")
        kind = float if any(isinstance(x, float) for x in default) else int
        try:
            return [kind(x) for x in value]
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"config key {where}: {exc}") from exc
    raise ConfigError(f"config key {where} has unsupported type")  # pragma: no cover


def load_config(path: str | None) -> dict:
    """Resolve the configuration tree from defaults plus an optional file."""
    cfg = default_config()
    if path is None:
        return cfg
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    if path.endswith(".json"):
        with open(path) as fh:
            payload = json.load(fh)
        if "config" not in payload:
            raise ConfigError(f"manifest {path} carries no config echo")
        _merge_checked(cfg, payload["config"])
        return cfg
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc
    _merge_checked(cfg, data)
    return cfg


def _parse_literal(text: str):
    text = text.strip()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text  # bare string


def apply_overrides(cfg: dict, assignments: list[str], source: str = "--set") -> None:
    """Apply key=value overrides, resolving bare-key aliases."""
    for item in assignments:
        if "=" not in item:
            raise ConfigError(f"{source} expects key=value, got {item!r}")
        key, _, raw = item.partition("=")
        key = key.strip()
        key = ALIASES.get(key, key)
        parts = key.split(".")
        if len(parts) != 2:
            raise ConfigError(f"unknown config key: {key}")
        section, leaf = parts
        if section not in cfg or leaf not in cfg[section]:
            raise ConfigError(f"unknown config key: {key}")
        cfg[section][leaf] = _coerce(key, _parse_literal(raw), cfg[section][leaf])


def apply_env_overrides(cfg: dict, environ=None) -> None:
    """Apply FLOQSSH_SET_section__key=value environment overrides."""
    env = os.environ if environ is None else environ
    items = []
    for name in sorted(env):
        if name.startswith(ENV_PREFIX):
            key = name[len(ENV_PREFIX):].lower().replace("__", ".")
            items.append(f"{key}={env[name]}")
    apply_overrides(cfg, items, source="environment")


def build_model(cfg: dict) -> ModelParams:
    m = cfg["model"]
    return ModelParams(m["w"], m["gamma"], m["v"], m["cells"], m["boundary"])


def build_drive(cfg: dict) -> DriveProtocol:
    d = cfg["drive"]
    return DriveProtocol(d["f"], d["q"], d["t1"], d["t2"])


def build_sweep_config(cfg: dict, diagram: bool = False) -> SweepConfig:
    s = cfg["sweep"]
    axis = SweepAxis(s["axis"], float(s["start"]), float(s["stop"]), int(s["steps"]))
    axis2 = None
    if diagram:
        g = cfg["diagram"]
        axis = SweepAxis("f", g["f_start"], g["f_stop"], g["f_steps"])
        axis2 = SweepAxis("w", g["w_start"], g["w_stop"], g["w_steps"])
    dis = cfg["disorder"]
    return SweepConfig(
        model=build_model(cfg),
        drive=build_drive(cfg),
        axis=axis,
        axis2=axis2,
        disorder_strengths=tuple(dis["strengths"]),
        realizations=dis["realizations"],
        master_seed=dis["seed"],
        disorder_range=dis["range"],
        sizes=tuple(cfg["scaling"]["sizes"]),
        outdir=cfg["output"]["directory"],
    )


def describe_defaults() -> str:
    """Flat key=default listing for --help."""
    lines = []
    for section, body in DEFAULTS.items():
        for key, value in body.items():
            lines.append(f"  {section}.{key} = {value!r}")
    return "\n".join(lines)
