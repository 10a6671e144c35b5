"""Variable moment of inertia and variable frequency oscillators, with the Morse map.

All formulas use hbar = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .core import QhoParams, QuantumNumbers, e_q
from .errors import ConfigError

__all__ = [
    "VmiParams",
    "MorseParams",
    "vmi_cubic",
    "vmi_theta",
    "vmi_energy",
    "rigid_rotor_energy",
    "vho_frequency",
    "vho_spectrum",
    "morse_anharmonicity",
    "morse_frequency",
    "morse_spectrum",
    "morse_to_vho",
    "epsilon_from_stiffness",
    "qvfo_frequency",
    "effective_frequency",
    "qvfo_energy",
]


@dataclass(frozen=True)
class VmiParams:
    """Stiffness ``C`` and ground-state moment of inertia ``theta0``."""

    C: float
    theta0: float

    def __post_init__(self) -> None:
        if not self.C > 0:
            raise ConfigError(f"C must be > 0, got {self.C!r}")
        if not (math.isfinite(self.theta0) and self.theta0 >= 0):
            raise ConfigError(f"theta0 must be finite and >= 0, got {self.theta0!r}")


@dataclass(frozen=True)
class MorseParams:
    D: float
    alpha: float
    mass: float = 1.0

    def __post_init__(self) -> None:
        for name in ("D", "alpha", "mass"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be finite and > 0, got {value!r}")


def vmi_cubic(theta: float, J: int, p: VmiParams) -> float:
    """Stationarity condition ``C theta^2 (theta - theta0) - J(J+1)/2``."""
    return p.C * theta * theta * (theta - p.theta0) - J * (J + 1) / 2.0


def vmi_theta(J: int, p: VmiParams) -> float:
    """Moment of inertia minimizing the VMI energy at fixed ``J``.

    The cubic has a single real root, bracketed by
    ``[theta0, theta0 + cbrt(J(J+1)/(2C)) + 1]``.
    """
    if J < 0:
        raise ConfigError(f"J must be >= 0, got {J}")
    if J == 0 or math.isinf(p.C):
        return p.theta0
    hi = p.theta0 + (J * (J + 1) / (2.0 * p.C)) ** (1.0 / 3.0) + 1.0
    root = brentq(vmi_cubic, p.theta0, hi, args=(J, p), xtol=1e-300, rtol=1e-15, maxiter=500)
    return float(root)


def rigid_rotor_energy(J: int, theta: float) -> float:
    return J * (J + 1) / (2.0 * theta)


def vmi_energy(J: int, p: VmiParams) -> float:
    if J == 0:
        return 0.0
    theta = vmi_theta(J, p)
    stretch = 0.0 if math.isinf(p.C) else 0.5 * p.C * (theta - p.theta0) ** 2
    return rigid_rotor_energy(J, theta) + stretch


def vho_frequency(n: int, C: float, omega0: float) -> float:
    """Stationary frequency ``omega0 - (n + 1/2) / C``."""
    return omega0 - (n + 0.5) / C


def vho_spectrum(n: int, C: float, omega0: float) -> float:
    """Energy of the variable frequency oscillator after minimizing over the frequency."""
    if n < 0:
        raise ConfigError(f"n must be >= 0, got {n}")
    x = n + 0.5
    return omega0 * x - 0.5 * x * x / C


def morse_anharmonicity(p: MorseParams) -> float:
    return 0.5 * p.alpha / math.sqrt(2.0 * p.mass * p.D)


def morse_frequency(p: MorseParams) -> float:
    return p.alpha * math.sqrt(2.0 * p.D / p.mass)


def morse_spectrum(n: int, p: MorseParams) -> float:
    if n < 0:
        raise ConfigError(f"n must be >= 0, got {n}")
    x = n + 0.5
    return morse_frequency(p) * (x - morse_anharmonicity(p) * x * x)


def morse_to_vho(p: MorseParams) -> tuple[float, float]:
    """``(C, omega0)`` for which :func:`vho_spectrum` equals the Morse levels."""
    omega = morse_frequency(p)
    return 1.0 / (2.0 * omega * morse_anharmonicity(p)), omega


def epsilon_from_stiffness(C: float, omega00: float) -> float:
    """Anharmonicity ``1 / (2 C omega00^2)`` produced by the variational VFO."""
    return 1.0 / (2.0 * C * omega00 * omega00)


def qvfo_frequency(qn: QuantumNumbers | tuple[int, int], tau: float, C: float, omega00: float) -> float:
    """Frequency that makes the q-oscillator energy stationary: ``omega00 - e_q / C``."""
    return omega00 - e_q(qn, tau) / C


def effective_frequency(qn: QuantumNumbers | tuple[int, int], p: QhoParams) -> float:
    """Frequency ``omega0 (1 - epsilon hbar omega0 e_q)`` with ``E' = hbar omega e_q``.

    Differs from :func:`qvfo_frequency` by a factor 2 in the shift; both
    give the same energy.
    """
    w0 = p.hbar_omega0
    return w0 * (1.0 - p.epsilon * w0 * e_q(qn, p.tau))


def qvfo_energy(qn: QuantumNumbers | tuple[int, int], tau: float, C: float, omega00: float) -> float:
    e = e_q(qn, tau)
    return omega00 * e - 0.5 * e * e / C
