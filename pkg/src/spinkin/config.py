"""Shared numerical tolerances."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_TOL = "SPINKIN_TOL"


@dataclass(frozen=True)
class ToleranceConfig:
    """Absolute/relative residual tolerances plus the matrix-exponential budget."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    expm_tol: float = 1e-13

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol", "expm_tol"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ValueError(f"{name} must be strictly positive, got {value}")


DEFAULT = ToleranceConfig()


def resolve_tolerances(flag_tol: float | None = None) -> ToleranceConfig:
    """Tolerances with overrides applied: --tol flag wins over SPINKIN_TOL, which wins over defaults.

    The override sets abs_tol and rel_tol (the check tolerances); expm_tol is fixed.
    """
    tol = flag_tol
    if tol is None:
        raw = os.environ.get(ENV_TOL)
        if raw is not None:
            tol = float(raw)
    if tol is None:
        return DEFAULT
    return ToleranceConfig(abs_tol=tol, rel_tol=tol, expm_tol=DEFAULT.expm_tol)
