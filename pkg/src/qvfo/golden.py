"""Reference values for magic numbers and liquid-drop fits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import QhoParams
from .shells import shell_decomposition
from .spectrum import DEFAULT_DELTA, build_scheme, magic_numbers

__all__ = [
    "MagicColumn",
    "FitRow",
    "MAGIC_COLUMNS",
    "FIT_ROWS",
    "SIGMA_RTOL",
    "COEFF_RTOL",
    "check_magic_column",
    "check_fit_row",
    "run_golden",
]

SIGMA_RTOL = 0.15
COEFF_RTOL = 0.20


@dataclass(frozen=True)
class MagicColumn:
    tau: float
    epsilon: float
    n_max: int
    n_total: int
    numbers: tuple[int, ...]


@dataclass(frozen=True)
class FitRow:
    tau: float
    epsilon: float
    n_cut: int
    coefficients: tuple[float, ...]
    sigma: float

    @property
    def n_max(self) -> int:
        return next(c.n_max for c in MAGIC_COLUMNS if (c.tau, c.epsilon) == (self.tau, self.epsilon))


MAGIC_COLUMNS = (
    MagicColumn(0.038, 0.0, 26, 4658, (
        2, 8, 20, 34, 40, 58, 92, 138, 198, 254, 268, 338, 440, 556, 562, 676, 694, 832,
        912, 1012, 1100, 1206, 1284, 1314, 1410, 1502, 1516, 1660, 1760, 2018, 2048, 2178,
        2334, 2368, 2654, 2672, 2722, 2796, 3028, 3050, 3190, 3404, 3438, 3464, 3610, 3848,
        3886, 4052, 4312, 4326, 4374, 4552,
    )),
    MagicColumn(0.038, 0.006, 26, 4658, (
        2, 8, 20, 34, 40, 58, 92, 138, 198, 254, 338, 440, 676, 832, 912, 1012, 1100, 1206,
        1660, 1760, 2048, 2368, 3028, 3438, 3886, 4052, 4374,
    )),
    MagicColumn(0.038, 0.007, 26, 4658, (
        2, 8, 20, 40, 58, 92, 138, 198, 254, 338, 440, 676, 832, 912, 1012, 1100, 1206,
        1660, 1760, 2048, 2368, 3028, 3438, 3886, 4374,
    )),
    MagicColumn(0.038, 0.008, 25, 4154, (
        2, 8, 20, 40, 58, 92, 138, 198, 254, 338, 440, 676, 832, 912, 1012, 1100, 1206,
        1660, 1760, 2048, 2368, 3028, 3438, 3886,
    )),
    MagicColumn(0.050, 0.0, 26, 4778, (
        2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 486, 542, 612, 676, 748,
        832, 890, 912, 1006, 1074, 1100, 1206, 1284, 1314, 1410, 1502, 1516, 1614, 1660,
        1734, 1760, 1778, 1940, 2018, 2048, 2178, 2334, 2368, 2510, 2672, 2684, 2722, 2876,
        3028, 3050, 3112, 3190, 3244, 3438, 3464, 3528, 3622, 3680, 3886, 3916, 3988, 4088,
        4156, 4374, 4408, 4462, 4488, 4578, 4596,
    )),
    MagicColumn(0.050, 0.0050, 26, 4778, (
        2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 542, 612, 676, 748, 832,
        912, 1006, 1074, 1100, 1284, 1314, 1410, 1502, 1516, 1760, 2018, 2048, 2178, 2334,
        2368, 2510, 2672, 2722, 3028, 3050, 3112, 3438, 3464, 3886, 3916, 3988, 4374, 4408,
    )),
    MagicColumn(0.050, 0.0053, 25, 4258, (
        2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 542, 612, 676, 748, 832,
        912, 1006, 1074, 1100, 1284, 1314, 1410, 1502, 1760, 2018, 2048, 2178, 2334, 2368,
        2510, 2672, 2722, 3028, 3050, 3112, 3438, 3464, 3886, 3916,
    )),
    MagicColumn(0.050, 0.0055, 25, 4258, (
        2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 542, 612, 676, 748, 832,
        912, 1006, 1074, 1100, 1284, 1410, 1502, 1760, 2018, 2048, 2178, 2334, 2368, 2510,
        2672, 2722, 3028, 3050, 3112, 3438, 3464, 3886, 3916,
    )),
)

# coefficients in natural units (table prints 10 a4, 1e2 a5, 1e4 a6)
FIT_ROWS = (
    FitRow(0.038, 0.0, 3009, (-21.035, 18.295, -7.295, 1.9521, -0.06082, 0.0040857), 8.904),
    FitRow(0.038, 0.006, 3009, (24.756, -20.883, 5.201, 0.0493, 0.07946, -0.0008993), 5.758),
    FitRow(0.038, 0.007, 3009, (32.475, -27.496, 7.306, -0.2704, 0.10297, -0.0017326), 5.297),
    FitRow(0.038, 0.008, 3009, (39.762, -33.786, 9.329, -0.5806, 0.12597, -0.0025559), 4.834),
    FitRow(0.050, 0.0, 2008, (-24.946, 24.641, -10.384, 2.6117, -0.13000, 0.0082558), 7.328),
    FitRow(0.050, 0.0050, 2008, (14.051, -13.208, 3.323, 0.2409, 0.07006, 0.0006484), 5.286),
    FitRow(0.050, 0.0053, 2008, (16.795, -15.857, 4.264, 0.0817, 0.08320, 0.0001634), 5.175),
    FitRow(0.050, 0.0055, 2008, (18.589, -17.556, 4.862, -0.0188, 0.09150, -0.0001464), 5.098),
)


def check_magic_column(col: MagicColumn, delta: float = DEFAULT_DELTA) -> list[str]:
    """Differences between computed and reference values; empty when they agree."""
    scheme = build_scheme(QhoParams(col.tau, col.epsilon), col.n_max)
    problems = []
    if scheme.total_capacity != col.n_total:
        problems.append(f"N_max {scheme.total_capacity} != {col.n_total}")
    got = magic_numbers(scheme, delta).numbers[: len(col.numbers)]
    if got != col.numbers:
        for i, (a, b) in enumerate(zip(got, col.numbers), start=1):
            if a != b:
                problems.append(f"i={i}: {a} != {b}")
                break
        if len(got) < len(col.numbers):
            problems.append(f"only {len(got)} of {len(col.numbers)} magic numbers")
    return problems


def check_fit_row(row: FitRow) -> list[str]:
    scheme = build_scheme(QhoParams(row.tau, row.epsilon), row.n_max)
    fit = shell_decomposition(scheme, row.n_cut).fit
    problems = []
    if abs(fit.sigma - row.sigma) > SIGMA_RTOL * row.sigma:
        problems.append(f"sigma {fit.sigma:.4f} vs {row.sigma}")
    for k, (got, ref) in enumerate(zip(fit.coefficients, row.coefficients), start=1):
        if np.sign(got) != np.sign(ref) or abs(got - ref) > COEFF_RTOL * abs(ref):
            problems.append(f"a{k} {got:.6g} vs {ref:.6g}")
    return problems


def run_golden() -> list[tuple[str, list[str]]]:
    """Compare every reference column and fit row; one ``(label, problems)`` per check."""
    report = []
    for col in MAGIC_COLUMNS:
        report.append((f"magic tau={col.tau} eps={col.epsilon}", check_magic_column(col)))
    for row in FIT_ROWS:
        report.append((f"fit tau={row.tau} eps={row.epsilon}", check_fit_row(row)))
    return report
