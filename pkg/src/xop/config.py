"""Run configuration for the verification pipeline.

A config is a single JSON document; CLI flags override fields, and the
environment variable XOP_TOL_SCALE multiplies every tolerance (default 1).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources

from .errors import UsageError
from .systems import SystemParams, system_from_dict
from .verify import Tolerances

__all__ = ["RunConfig", "GridConfig", "OutputConfig", "load_config", "default_config"]

TOL_SCALE_ENV = "XOP_TOL_SCALE"


@dataclass(frozen=True)
class GridConfig:
    points: int = 2000
    domain_overrides: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.points < 64:
            raise UsageError(f"grid points must be at least 64, got {self.points}")
        for kind, bounds in self.domain_overrides.items():
            if len(bounds) != 2 or not bounds[0] < bounds[1]:
                raise UsageError(f"bad domain override for {kind}: {bounds!r}")

    def domain_for(self, kind: str):
        if kind in self.domain_overrides:
            lo, hi = self.domain_overrides[kind]
            return float(lo), float(hi)
        return None


@dataclass(frozen=True)
class OutputConfig:
    format: str = "json"
    path: str = "reports"

    def __post_init__(self):
        if self.format not in ("csv", "json"):
            raise UsageError(f"output format must be 'csv' or 'json', got {self.format!r}")


@dataclass(frozen=True)
class RunConfig:
    systems: tuple[SystemParams, ...]
    levels: int = 4
    tolerances: Tolerances = Tolerances()
    grid: GridConfig = GridConfig()
    output: OutputConfig = OutputConfig()

    def __post_init__(self):
        if not self.systems:
            raise UsageError("config lists no systems")
        if not 1 <= self.levels <= 8:
            raise UsageError(f"levels must lie in 1..8, got {self.levels}")


def _tolerance_scale() -> float:
    raw = os.environ.get(TOL_SCALE_ENV)
    if raw is None:
        return 1.0
    try:
        scale = float(raw)
    except ValueError as exc:
        raise UsageError(f"{TOL_SCALE_ENV} must be a number, got {raw!r}") from exc
    if not scale > 0:
        raise UsageError(f"{TOL_SCALE_ENV} must be positive, got {scale}")
    return scale


def config_from_dict(data: dict) -> RunConfig:
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    try:
        systems = tuple(system_from_dict(entry) for entry in data["systems"])
    except KeyError as exc:
        raise UsageError("config is missing the 'systems' list") from exc
    tol_data = data.get("tolerances", {})
    try:
        tolerances = Tolerances(**tol_data)
    except TypeError as exc:
        raise UsageError(f"bad tolerances block: {tol_data!r}") from exc
    tolerances = tolerances.scaled(_tolerance_scale())
    grid_data = dict(data.get("grid", {}))
    grid_data.setdefault("domain_overrides", {})
    try:
        grid = GridConfig(**grid_data)
    except TypeError as exc:
        raise UsageError(f"bad grid block: {grid_data!r}") from exc
    out_data = data.get("output", {})
    try:
        output = OutputConfig(**out_data)
    except TypeError as exc:
        raise UsageError(f"bad output block: {out_data!r}") from exc
    return RunConfig(
        systems=systems,
        levels=int(data.get("levels", 4)),
        tolerances=tolerances,
        grid=grid,
        output=output,
    )


def default_config() -> RunConfig:
    """Bundled configuration covering all four source systems."""
    text = resources.files("xop.data").joinpath("default_config.json").read_text()
    return config_from_dict(json.loads(text))


def load_config(path: str | None) -> RunConfig:
    if path is None:
        return default_config()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)
