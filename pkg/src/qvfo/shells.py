"""Total energies split into a liquid-drop average plus a shell part.

The smooth part of ``E(N)`` is a six-term expansion in powers of
``N**(1/3)``; the shell energy is what remains after subtracting it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import ConfigError, CutExceedsScheme, RankDeficient, TooFewExtrema
from .spectrum import LevelScheme

__all__ = [
    "EnergySeries",
    "LiquidDropFit",
    "ShellDecomposition",
    "total_energy_series",
    "window_samples",
    "liquid_drop_basis",
    "liquid_drop_fit",
    "shell_decomposition",
    "shell_envelope",
    "beat_node",
]

N_TERMS = 6


@dataclass(frozen=True)
class EnergySeries:
    """Cumulative single-particle energies.

    ``values[N]`` is ``E(N)`` for ``N = 0..n_cut``; ``values[0] == 0``.
    """

    values: np.ndarray

    @property
    def n_cut(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]


@dataclass(frozen=True)
class LiquidDropFit:
    coefficients: tuple[float, ...]
    sigma: float
    n_points: int
    n_cut: int

    @property
    def a1(self) -> float:
        return self.coefficients[0]

    @property
    def a2(self) -> float:
        return self.coefficients[1]

    @property
    def a3(self) -> float:
        return self.coefficients[2]

    @property
    def a4(self) -> float:
        return self.coefficients[3]

    @property
    def a5(self) -> float:
        return self.coefficients[4]

    @property
    def a6(self) -> float:
        return self.coefficients[5]

    def evaluate(self, n) -> np.ndarray:
        return liquid_drop_basis(n) @ np.asarray(self.coefficients)


@dataclass(frozen=True)
class ShellDecomposition:
    n: np.ndarray
    energy: np.ndarray
    average: np.ndarray
    shell: np.ndarray
    fit: LiquidDropFit

    @property
    def samples(self) -> list[tuple[int, float, float, float]]:
        return [
            (int(n), float(e), float(a), float(s))
            for n, e, a, s in zip(self.n, self.energy, self.average, self.shell)
        ]


def total_energy_series(scheme: LevelScheme, n_cut: int) -> EnergySeries:
    """Sum of the ``N`` lowest single-particle energies for ``N <= n_cut``."""
    if n_cut < 0:
        raise ConfigError(f"n_cut must be >= 0, got {n_cut}")
    if n_cut > scheme.total_capacity:
        raise CutExceedsScheme(
            f"n_cut={n_cut} exceeds the scheme capacity {scheme.total_capacity}"
        )
    energies = np.array([lv.energy for lv in scheme.levels], dtype=float)
    capacity = np.array([lv.capacity for lv in scheme.levels], dtype=int)
    states = np.repeat(energies, capacity)[:n_cut]
    return EnergySeries(np.concatenate(([0.0], np.cumsum(states))))


def window_samples(
    series: EnergySeries,
    start: int = 6,
    stride: int = 11,
    last: int | None = None,
    half_width: int = 5,
) -> tuple[np.ndarray, np.ndarray]:
    """Centered running means of ``E(N)`` at ``N = start, start + stride, ...``.

    Each sample averages ``E(N - half_width) .. E(N + half_width)``.
    Centers run up to ``last`` (inclusive); by default up to the last center
    whose window fits inside the series.
    """
    if start - half_width < 1:
        raise ConfigError(f"first window would reach N={start - half_width} < 1")
    if stride < 1:
        raise ConfigError(f"stride must be >= 1, got {stride}")
    fit_limit = series.n_cut - half_width
    last = fit_limit if last is None else last
    if last > fit_limit:
        raise CutExceedsScheme(
            f"window around N={last} needs E up to N={last + half_width}, "
            f"series ends at {series.n_cut}"
        )
    centers = np.arange(start, last + 1, stride)
    if centers.size == 0:
        raise CutExceedsScheme("series too short for a single window")
    # prefix sums give every window mean in O(1)
    prefix = np.concatenate(([0.0], np.cumsum(series.values)))
    width = 2 * half_width + 1
    means = (prefix[centers + half_width + 1] - prefix[centers - half_width]) / width
    return centers, means


def liquid_drop_basis(n) -> np.ndarray:
    """Columns ``N^(k/3)`` for ``k = 1..6``."""
    x = np.cbrt(np.asarray(n, dtype=float))
    return np.stack([x**k for k in range(1, N_TERMS + 1)], axis=-1)


def liquid_drop_fit(n, e) -> LiquidDropFit:
    """Unweighted least squares fit of the liquid-drop expansion.

    Solved by Householder QR on a column-equilibrated design matrix, which
    keeps the near-collinear powers of ``N**(1/3)`` well behaved.
    """
    n = np.asarray(n, dtype=float)
    e = np.asarray(e, dtype=float)
    if n.shape != e.shape or n.ndim != 1:
        raise ConfigError("abscissae and energies must be 1-D arrays of equal length")
    if np.unique(n).size < N_TERMS:
        raise RankDeficient(f"need >= {N_TERMS} distinct N, got {np.unique(n).size}")
    a = liquid_drop_basis(n)
    scale = np.linalg.norm(a, axis=0)
    q, r = np.linalg.qr(a / scale)
    diag = np.abs(np.diag(r))
    if diag.min() <= len(n) * np.finfo(float).eps * diag.max():
        raise RankDeficient("design matrix is numerically rank deficient")
    coef = solve_triangular(r, q.T @ e) / scale
    resid = e - a @ coef
    sigma = float(np.sqrt(np.mean(resid**2)))
    return LiquidDropFit(
        coefficients=tuple(float(c) for c in coef),
        sigma=sigma,
        n_points=len(n),
        n_cut=int(n.max()),
    )


def shell_decomposition(
    scheme: LevelScheme,
    n_cut: int,
    start: int = 6,
    stride: int = 11,
    half_width: int = 5,
) -> ShellDecomposition:
    """Split windowed ``E(N)`` into liquid-drop average and shell part.

    Sample centers run from ``start`` up to ``n_cut`` inclusive, so the last
    window reads ``E`` up to ``n_cut + half_width``.
    """
    series = total_energy_series(scheme, n_cut + half_width)
    n, e = window_samples(series, start, stride, last=n_cut, half_width=half_width)
    fit = liquid_drop_fit(n, e)
    avg = fit.evaluate(n)
    return ShellDecomposition(n=n, energy=e, average=avg, shell=e - avg, fit=fit)


def _lobe_peaks(signal: np.ndarray) -> np.ndarray:
    """Index of the largest ``|signal|`` within each run of constant sign."""
    sign = np.sign(signal)
    breaks = np.flatnonzero(np.diff(sign)) + 1
    bounds = np.concatenate(([0], breaks, [len(signal)]))
    return np.array(
        [lo + int(np.argmax(np.abs(signal[lo:hi]))) for lo, hi in zip(bounds, bounds[1:])],
        dtype=int,
    )


def shell_envelope(dec: ShellDecomposition) -> tuple[np.ndarray, np.ndarray]:
    """Upper envelope of ``|E_shell|`` with its overall power-law growth removed.

    One envelope point per oscillation lobe (run of constant sign); the two
    edge lobes are dropped since they are cut by the sampling range.
    Returns ``(N, relative amplitude)``.
    """
    idx = _lobe_peaks(dec.shell)[1:-1]
    if idx.size < 3:
        raise TooFewExtrema(f"only {idx.size} interior oscillation lobes")
    n = dec.n[idx].astype(float)
    amp = np.abs(dec.shell[idx])
    pos = amp > 0
    slope, icept = np.polyfit(np.log(n[pos]), np.log(amp[pos]), 1)
    return dec.n[idx], amp / np.exp(icept + slope * np.log(n))


def beat_node(dec: ShellDecomposition) -> int:
    """Particle number at the minimum of the shell-energy envelope.

    The minimum is taken strictly between the first and last envelope
    points.
    """
    n, rel = shell_envelope(dec)
    k = 1 + int(np.argmin(rel[1:-1]))
    return int(n[k])
