"""Sorted level schemes and the magic numbers read from their gaps."""

from __future__ import annotations

from dataclasses import dataclass

from .core import QhoParams, QuantumNumbers, allowed_l, energy, vfo_energy
from .errors import ConfigError, InversionBeforeNmax, NonMonotoneVfo

__all__ = [
    "DEFAULT_DELTA",
    "Level",
    "LevelScheme",
    "MagicTable",
    "level_energy",
    "build_scheme",
    "detect_inversion",
    "magic_numbers",
]

DEFAULT_DELTA = 0.38


@dataclass(frozen=True)
class Level:
    n: int
    l: int
    energy: float
    bare_energy: float

    @property
    def capacity(self) -> int:
        return 2 * (2 * self.l + 1)


@dataclass(frozen=True)
class LevelScheme:
    params: QhoParams
    n_max: int
    levels: tuple[Level, ...]

    @property
    def total_capacity(self) -> int:
        return sum(lv.capacity for lv in self.levels)

    def __len__(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class MagicTable:
    """Shell closures ``N_i`` indexed from ``i = 1``."""

    numbers: tuple[int, ...]
    delta: float

    @property
    def entries(self) -> list[tuple[int, int]]:
        return list(enumerate(self.numbers, start=1))

    def __len__(self) -> int:
        return len(self.numbers)

    def __getitem__(self, i: int) -> int:
        """Magic number with running index ``i`` (1-based)."""
        if not 1 <= i <= len(self.numbers):
            raise IndexError(f"index {i} outside 1..{len(self.numbers)}")
        return self.numbers[i - 1]


def level_energy(n: int, l: int, p: QhoParams) -> float:
    return vfo_energy(energy(QuantumNumbers(n, l), p), p)


def detect_inversion(p: QhoParams, n_limit: int) -> int | None:
    """Smallest shell ``n <= n_limit`` whose lowest member is not ``l = n``."""
    if n_limit < 0:
        raise ConfigError(f"n_limit must be >= 0, got {n_limit}")
    for n in range(n_limit + 1):
        top = level_energy(n, n, p)
        if any(level_energy(n, l, p) < top for l in allowed_l(n)[1:]):
            return n
    return None


def build_scheme(p: QhoParams, n_max: int) -> LevelScheme:
    """Energy-sorted levels up to the ``(n_max, n_max)`` level.

    Every level with ``n <= n_max`` whose energy does not exceed that of
    ``(n_max, n_max)`` is kept; higher members of lower shells are dropped.
    Ties sort by ``(n, l)``.
    """
    if n_max < 0:
        raise ConfigError(f"n_max must be >= 0, got {n_max}")
    n_star = detect_inversion(p, n_max)
    if n_star is not None:
        raise InversionBeforeNmax(
            f"level order inverts in shell n={n_star} <= n_max={n_max} "
            f"(tau={p.tau}, epsilon={p.epsilon})"
        )
    cut = level_energy(n_max, n_max, p)
    levels = []
    for n in range(n_max + 1):
        for l in allowed_l(n):
            bare = energy(QuantumNumbers(n, l), p)
            e = vfo_energy(bare, p)
            if e <= cut:
                levels.append(Level(n, l, e, bare))
    if p.epsilon > 0:
        limit = 1.0 / (2.0 * p.epsilon)
        for lv in levels:
            if lv.bare_energy >= limit:
                raise NonMonotoneVfo(
                    f"level ({lv.n},{lv.l}) has E={lv.bare_energy:.6g} >= 1/(2 epsilon)={limit:.6g}"
                )
    levels.sort(key=lambda lv: (lv.energy, lv.n, lv.l))
    return LevelScheme(params=p, n_max=n_max, levels=tuple(levels))


def magic_numbers(scheme: LevelScheme, delta: float = DEFAULT_DELTA) -> MagicTable:
    """Cumulative occupancies followed by a gap larger than ``delta``.

    The edge above the last retained level is an artificial cutoff and never
    counts as a gap.
    """
    if not delta > 0:
        raise ConfigError(f"delta must be > 0, got {delta}")
    levels = scheme.levels
    found = []
    filled = 0
    for lower, upper in zip(levels, levels[1:]):
        filled += lower.capacity
        if upper.energy - lower.energy > delta:
            found.append(filled)
    return MagicTable(numbers=tuple(found), delta=delta)
