"""Scenario configuration: flat ``key = value`` files and validation."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, fields
from typing import Optional

from .errors import PreconditionError
from .fidelity import Correlation, SpinState
from .kinematics import rapidity_from_beta
from .moments import MomentumSupport, QuadratureSettings


class ConfigError(PreconditionError):
    """Malformed or inconsistent scenario configuration."""


FIGURE_PRESETS = {
    1: dict(state="ghz", corr="all", gamma=20.0, theta=0.0,
            eta_min=0.0, eta_max=10.0, steps=201),
    2: dict(state="w", corr="all", gamma=20.0, theta=0.0,
            eta_min=0.0, eta_max=10.0, steps=201),
}


@dataclass
class ScenarioConfig:
    state: str = "all"
    corr: str = "all"
    gamma: float = 20.0
    theta: float = 0.0
    support: str = "symmetric"
    eta: Optional[float] = None
    beta: Optional[float] = None
    eta_min: Optional[float] = None
    eta_max: Optional[float] = None
    steps: Optional[int] = None
    with_oracle: bool = False
    oracle_nodes: int = 128
    output: str = "csv"
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 200
    truncation_sigmas: float = 6.5

    @property
    def states(self):
        if self.state == "all":
            return list(SpinState)
        return [SpinState(self.state)]

    @property
    def corrs(self):
        if self.corr == "all":
            return list(Correlation)
        return [Correlation(self.corr)]

    @property
    def momentum_support(self):
        return MomentumSupport(self.support)

    @property
    def quadrature(self):
        return QuadratureSettings(
            self.rel_tol, self.abs_tol, self.max_subdivisions, self.truncation_sigmas
        )

    @property
    def has_range(self):
        return any(v is not None for v in (self.eta_min, self.eta_max, self.steps))

    def single_eta(self) -> float:
        """The one boost rapidity of a point evaluation."""
        if self.has_range:
            raise ConfigError("an eta range is not allowed for a single point")
        if (self.eta is None) == (self.beta is None):
            raise ConfigError("give exactly one of eta or beta")
        if self.beta is not None:
            # boosts enter only through |eta|
            return abs(rapidity_from_beta(self.beta))
        if self.eta < 0:
            raise ConfigError("eta must be >= 0")
        return self.eta

    def eta_grid(self) -> list:
        """Evenly spaced rapidities; defaults to [0, 10] with 201 points."""
        if self.eta is not None or self.beta is not None:
            raise ConfigError("a sweep takes an eta range, not a single eta or beta")
        lo = 0.0 if self.eta_min is None else self.eta_min
        hi = 10.0 if self.eta_max is None else self.eta_max
        n = 201 if self.steps is None else self.steps
        if lo < 0 or not hi > lo or n < 2:
            raise ConfigError("need eta_min >= 0, eta_max > eta_min, steps >= 2")
        return [lo + (hi - lo) * i / (n - 1) for i in range(n)]

    def validate(self):
        try:
            self.states, self.corrs, self.momentum_support, self.quadrature
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if not (self.gamma > 0 and math.isfinite(self.gamma)):
            raise ConfigError("gamma must be positive")
        if not 0.0 <= self.theta <= 0.5 * math.pi:
            raise ConfigError("theta must lie in [0, pi/2]")
        if self.oracle_nodes < 8:
            raise ConfigError("oracle_nodes must be >= 8")
        if self.output not in ("csv", "json"):
            raise ConfigError("output must be csv or json")
        return self

    def dump(self) -> str:
        lines = ["# spinfid scenario"]
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if isinstance(value, bool):
                value = "true" if value else "false"
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{f.name} = {value}")
        return "\n".join(lines) + "\n"


_FIELD_TYPES = {
    "state": str, "corr": str, "support": str, "output": str,
    "gamma": float, "theta": float, "eta": float, "beta": float,
    "eta_min": float, "eta_max": float, "rel_tol": float, "abs_tol": float,
    "truncation_sigmas": float,
    "steps": int, "oracle_nodes": int, "max_subdivisions": int,
    "with_oracle": bool, "figure": int,
}


def _convert(key, raw):
    kind = _FIELD_TYPES[key]
    if kind is bool:
        low = raw.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{key}: expected a boolean, got {raw!r}")
    try:
        return kind(raw)
    except ValueError:
        raise ConfigError(f"{key}: cannot parse {raw!r} as {kind.__name__}") from None


def parse_config_text(text: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _FIELD_TYPES:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _convert(key, raw)
    return values


def build_config(file_values=None, overrides=None) -> ScenarioConfig:
    """Layer defaults, file values, a figure preset, then explicit overrides."""
    file_values = dict(file_values or {})
    overrides = overrides or {}
    figure = overrides.get("figure", file_values.pop("figure", None))
    layered = file_values
    if figure is not None:
        if figure not in FIGURE_PRESETS:
            raise ConfigError(f"unknown figure {figure}; choose 1 or 2")
        layered.update(FIGURE_PRESETS[figure])
    for key, value in overrides.items():
        if key != "figure":
            layered[key] = value
    return dataclasses.replace(ScenarioConfig(), **layered).validate()
