"""Suite configuration: defaults, JSON loading, and validation.

Validation failures raise :class:`ConfigError` carrying the offending field
path; the CLI maps these to exit code 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any

from .spaces import SpaceSpec

__all__ = ["ConfigError", "Tolerances", "SuiteConfig", "default_spaces", "load_config"]


class ConfigError(ValueError):
    """Invalid configuration; ``field`` names the offending entry."""

    def __init__(self, field_path: str, message: str) -> None:
        self.field_path = field_path
        super().__init__("%s: %s" % (field_path, message))


@dataclass(frozen=True)
class Tolerances:
    residual_tol: float = 1e-10
    sandwich_slack: float = 1e-9
    oracle_tol: float = 1e-12


def default_spaces(p_grid: tuple[float, ...], weight: str = "power:1") -> tuple[SpaceSpec, ...]:
    """Space list spanned by the exponent grid.

    Plain p-norms and majorant-p norms for every p; averaged p-norms and the
    splice norms (with q = p + 1) for p > 1; one weighted p-norm per p plus
    one weighted sup norm, all with the same decreasing weight family.
    """
    spaces: list[SpaceSpec] = []
    spaces.extend(SpaceSpec("Lp", p=p) for p in p_grid)
    spaces.extend(SpaceSpec("CesP", p=p) for p in p_grid if p > 1)
    spaces.extend(SpaceSpec("Dp", p=p) for p in p_grid)
    spaces.extend(SpaceSpec("LpWeighted", p=p, w=weight) for p in p_grid)
    spaces.append(SpaceSpec("C0Weighted", w=weight))
    spaces.extend(SpaceSpec("Xpq", p=p, q=p + 1) for p in p_grid if p > 1)
    return tuple(spaces)


_DEFAULT_T = (0.0, 0.1, 0.25, 0.5, 0.75, 0.9)
_DEFAULT_P = (1.0, 1.5, 2.0, 3.0)


@dataclass(frozen=True)
class SuiteConfig:
    t_grid: tuple[float, ...] = _DEFAULT_T
    p_grid: tuple[float, ...] = _DEFAULT_P
    q_grid: tuple[float, ...] = tuple(p + 1 for p in _DEFAULT_P)
    n: int = 512
    m_grid: tuple[int, ...] = (0, 1, 3, 7, 15, 31, 63)
    spaces: tuple[SpaceSpec, ...] = field(default_factory=lambda: default_spaces(_DEFAULT_P))
    seed: int = 42
    budget: int = 4000
    oracle_cases: int = 1000
    tolerances: Tolerances = field(default_factory=Tolerances)

    def validate(self) -> "SuiteConfig":
        if not self.t_grid:
            raise ConfigError("t_grid", "must be non-empty")
        for i, t in enumerate(self.t_grid):
            if not 0.0 <= t < 1.0:
                raise ConfigError("t_grid[%d]" % i, "t must lie in [0, 1), got %r" % t)
        if not self.p_grid:
            raise ConfigError("p_grid", "must be non-empty")
        for i, p in enumerate(self.p_grid):
            if p < 1.0:
                raise ConfigError("p_grid[%d]" % i, "p must be >= 1, got %r" % p)
        for i, q in enumerate(self.q_grid):
            if q <= 1.0:
                raise ConfigError("q_grid[%d]" % i, "q must be > 1, got %r" % q)
        if not self.spaces:
            raise ConfigError("spaces", "must be non-empty")
        if self.n < 2:
            raise ConfigError("n", "prefix length must be >= 2")
        if self.m_grid and max(self.m_grid) + 1 > self.n:
            raise ConfigError("m_grid", "need n >= max(m_grid) + 1")
        if self.budget < 64:
            raise ConfigError("budget", "evaluation budget must be >= 64")
        if self.oracle_cases < 1:
            raise ConfigError("oracle_cases", "must be >= 1")
        return self


def _space_from_entry(entry: Any, path: str) -> SpaceSpec:
    if not isinstance(entry, dict):
        raise ConfigError(path, "space entries must be objects")
    try:
        return SpaceSpec.from_json(entry)
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(path, str(exc)) from None


def load_config(path: str | None = None, **overrides: Any) -> SuiteConfig:
    """Build a validated config from an optional JSON file plus overrides.

    Override keyword arguments win over file values (None means absent).
    """
    data: dict[str, Any] = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError("<file>", "invalid JSON: %s" % exc) from None
        if not isinstance(data, dict):
            raise ConfigError("<file>", "top level must be an object")

    cfg = SuiteConfig()
    known = {
        "t_grid",
        "p_grid",
        "q_grid",
        "n",
        "m_grid",
        "spaces",
        "seed",
        "budget",
        "oracle_cases",
        "tolerances",
    }
    for key in data:
        if key not in known:
            raise ConfigError(key, "unknown configuration field")

    def pick(key: str, cast) -> None:
        nonlocal cfg
        value = overrides.get(key)
        if value is None:
            value = data.get(key)
        if value is not None:
            try:
                cfg = replace(cfg, **{key: cast(value)})
            except (TypeError, ValueError) as exc:
                raise ConfigError(key, str(exc)) from None

    pick("t_grid", lambda v: tuple(float(x) for x in v))
    pick("p_grid", lambda v: tuple(float(x) for x in v))
    pick("q_grid", lambda v: tuple(float(x) for x in v))
    pick("n", int)
    pick("m_grid", lambda v: tuple(int(x) for x in v))
    pick("seed", int)
    pick("budget", int)
    pick("oracle_cases", int)
    if "tolerances" in data or overrides.get("tolerances") is not None:
        raw = overrides.get("tolerances") or data.get("tolerances")
        if not isinstance(raw, dict):
            raise ConfigError("tolerances", "must be an object")
        try:
            cfg = replace(cfg, tolerances=Tolerances(**raw))
        except TypeError as exc:
            raise ConfigError("tolerances", str(exc)) from None

    spaces_raw = overrides.get("spaces")
    if spaces_raw is None:
        spaces_raw = data.get("spaces")
    if spaces_raw is not None:
        spaces = tuple(
            _space_from_entry(entry, "spaces[%d]" % i) for i, entry in enumerate(spaces_raw)
        )
        cfg = replace(cfg, spaces=spaces)
    elif "p_grid" in data or overrides.get("p_grid") is not None:
        cfg = replace(cfg, spaces=default_spaces(cfg.p_grid))

    return cfg.validate()
