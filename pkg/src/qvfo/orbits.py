"""Periodic-orbit geometry of a spherical cavity and magic-number slopes.

Electrons in a sphere of radius ``R = r_s N**(1/3)``; the triangular and
square orbits interfere, which makes ``N_i**(1/3)`` linear in the shell
index ``i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, RangeOutOfTable
from .spectrum import MagicTable

__all__ = [
    "CALIBRATED_SLOPE",
    "GEOMETRIC_FACTOR",
    "CavityModel",
    "SlopeFit",
    "cavity_radius",
    "orbit_length",
    "balian_bloch_slope",
    "fit_cuberoot_line",
    "residual_steps",
]

# 2 / (L3 + L4) per unit cavity radius
GEOMETRIC_FACTOR = 2.0 / (3.0 * math.sqrt(3.0) + 4.0 * math.sqrt(2.0))
# reference slope for alkali clusters with v_F r_s folded in
CALIBRATED_SLOPE = 0.605


@dataclass(frozen=True)
class CavityModel:
    r_s: float
    v_f: float
    m_e: float = 1.0
    h: float = 2.0 * math.pi

    def __post_init__(self) -> None:
        for name in ("r_s", "v_f", "m_e", "h"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be finite and > 0, got {value!r}")

    @classmethod
    def free_electron(cls, r_s: float) -> "CavityModel":
        """Cavity with the Fermi velocity of a free electron gas (atomic units)."""
        k_f = (9.0 * math.pi / 4.0) ** (1.0 / 3.0) / r_s
        return cls(r_s=r_s, v_f=k_f, m_e=1.0, h=2.0 * math.pi)


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    rms: float
    i_range: tuple[int, int]

    def predict(self, i) -> np.ndarray:
        return self.intercept + self.slope * np.asarray(i, dtype=float)


def cavity_radius(model: CavityModel, n: int) -> float:
    if n < 1:
        raise ConfigError(f"N must be >= 1, got {n}")
    return model.r_s * n ** (1.0 / 3.0)


def orbit_length(model: CavityModel, n: int, kind: str) -> float:
    """Length of the triangular or square orbit in the cavity for ``n`` electrons."""
    sides = {"triangle": 3.0 * math.sqrt(3.0), "square": 4.0 * math.sqrt(2.0)}
    try:
        factor = sides[kind]
    except KeyError:
        raise ConfigError(f"kind must be 'triangle' or 'square', got {kind!r}") from None
    return factor * cavity_radius(model, n)


def balian_bloch_slope(model: CavityModel | None = None) -> float:
    """Predicted slope of ``N_i**(1/3)`` against ``i``.

    With no model the calibrated alkali value is returned.
    """
    if model is None:
        return CALIBRATED_SLOPE
    return model.h / (model.m_e * model.v_f * model.r_s) * GEOMETRIC_FACTOR


def fit_cuberoot_line(magic: MagicTable, i_from: int = 1, i_to: int | None = None) -> SlopeFit:
    """Ordinary least squares line through ``(i, N_i**(1/3))`` for ``i_from <= i <= i_to``."""
    i_to = len(magic) if i_to is None else i_to
    if i_to - i_from < 1:
        raise RangeOutOfTable(f"need at least two indices, got {i_from}..{i_to}")
    if i_from < 1 or i_to > len(magic):
        raise RangeOutOfTable(f"range {i_from}..{i_to} outside table of {len(magic)} entries")
    i = np.arange(i_from, i_to + 1, dtype=float)
    y = np.cbrt(np.array(magic.numbers[i_from - 1 : i_to], dtype=float))
    di = i - i.mean()
    slope = float(di @ (y - y.mean()) / (di @ di))
    intercept = float(y.mean() - slope * i.mean())
    rms = float(np.sqrt(np.mean((y - intercept - slope * i) ** 2)))
    return SlopeFit(slope=slope, intercept=intercept, rms=rms, i_range=(i_from, i_to))


def residual_steps(magic: MagicTable, fit: SlopeFit) -> list[tuple[int, float]]:
    """Jump in mean residual across each candidate node index.

    For every split index ``k`` inside the fitted range, returns
    ``(k, mean residual for i >= k minus mean residual for i < k)``. A
    half-unit phase shift of the index shows up as a step of about
    ``slope / 2``.
    """
    lo, hi = fit.i_range
    i = np.arange(lo, hi + 1)
    y = np.cbrt(np.array(magic.numbers[lo - 1 : hi], dtype=float))
    resid = y - fit.predict(i)
    steps = []
    for k in range(lo + 1, hi + 1):
        before, after = resid[i < k], resid[i >= k]
        steps.append((k, float(after.mean() - before.mean())))
    return steps
