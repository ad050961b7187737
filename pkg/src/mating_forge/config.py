"""Centralized numerical tolerances and depth limits.

All modules pull their thresholds from a single :class:`Tolerances` record so
that a config file (pointed at by ``MATING_FORGE_CONFIG``) or a CLI flag can
override any of them in one place.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "MATING_FORGE_CONFIG"


@dataclass(frozen=True)
class Tolerances:
    # Newton iteration stop / acceptance
    newton_tol: float = 1e-13
    accept_poly: float = 1e-12      # residual bound for solved polynomial parameters
    accept_v2: float = 1e-9         # residual bound for solved V2 parameters
    # geometric matching
    geometry_tol: float = 1e-6      # ray landings, bubble roots, collision checks
    landing_match: float = 1e-9     # snapping stored landing points / marked points
    separation_tol: float = 1e-3    # distinct points must stay this far apart
    # ray tracing
    escape_radius: float = 1e4
    trace_levels: int = 40
    steps_per_level: int = 4
    # internal rays (Boettcher charts of the period-2 basins)
    internal_levels: int = 40
    internal_potential: float = 6.0
    # depth caps
    max_depth: int = 12
    boundary_samples: int = 64

    def replaced(self, **kw) -> "Tolerances":
        return replace(self, **kw)


def load_tolerances(path: str | None = None) -> Tolerances:
    """Tolerances from a JSON config file, falling back to defaults.

    ``path`` wins over the ``MATING_FORGE_CONFIG`` environment variable.
    Unknown keys are rejected so typos do not silently do nothing.
    """
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return Tolerances()
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    known = {f.name for f in fields(Tolerances)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown tolerance keys in {path}: {sorted(unknown)}")
    return Tolerances(**data)


DEFAULT = Tolerances()
