"""q-numbers and single-level energies of the 3D q-deformed oscillator.

All energies are dimensionless multiples of ``hbar_omega0`` unless noted.
The deformation is real, ``q = exp(tau)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError

__all__ = [
    "SMALL_TAU",
    "QhoParams",
    "QuantumNumbers",
    "q_number",
    "allowed_l",
    "e_q",
    "energy",
    "vfo_energy",
    "taylor_energy",
]

# Below this |tau| the sinh ratio is replaced by its series expansion.
SMALL_TAU = 1e-6


@dataclass(frozen=True)
class QhoParams:
    """Model configuration: deformation and anharmonicity on a chosen energy scale.

    ``epsilon`` multiplies the squared energy, so it carries units of
    inverse energy; with the default ``hbar_omega0 = 1`` the distinction
    disappears.
    """

    tau: float
    epsilon: float = 0.0
    hbar_omega0: float = 1.0

    def __post_init__(self) -> None:
        if isinstance(self.tau, complex) or not math.isfinite(self.tau):
            raise ConfigError(f"tau must be a finite real number, got {self.tau!r}")
        if not math.isfinite(self.epsilon) or self.epsilon < 0:
            raise ConfigError(f"epsilon must be finite and >= 0, got {self.epsilon!r}")
        if not math.isfinite(self.hbar_omega0) or self.hbar_omega0 <= 0:
            raise ConfigError(f"hbar_omega0 must be > 0, got {self.hbar_omega0!r}")

    @property
    def q(self) -> float:
        return math.exp(self.tau)


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    n: int
    l: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.l < 0:
            raise ConfigError(f"quantum numbers must be non-negative: {self}")
        if self.l > self.n or (self.n - self.l) % 2:
            raise ConfigError(f"l must be one of n, n-2, ..., 0 or 1: {self}")


def q_number(x: float, tau: float) -> float:
    """Return the q-number ``[x] = sinh(tau*x) / sinh(tau)``.

    For ``|tau| < SMALL_TAU`` the ratio is 0/0 in floating point and the
    series ``x * (1 + tau**2 * (x**2 - 1) / 6)`` is used instead.
    """
    if abs(tau) < SMALL_TAU:
        return x * (1.0 + tau * tau * (x * x - 1.0) / 6.0)
    return math.sinh(tau * x) / math.sinh(tau)


def allowed_l(n: int) -> list[int]:
    """Angular momenta in shell ``n``: ``[n, n-2, ..., 0 or 1]``."""
    if n < 0:
        raise ConfigError(f"n must be >= 0, got {n}")
    return list(range(n, -1, -2))


def _as_qn(qn) -> QuantumNumbers:
    if isinstance(qn, QuantumNumbers):
        return qn
    return QuantumNumbers(*qn)


def e_q(qn: QuantumNumbers | tuple[int, int], tau: float) -> float:
    """Dimensionless eigenvalue ``[n] q^(n+1) - q (q - 1/q) / [2] * [l][l+1]``."""
    qn = _as_qn(qn)
    n, l = qn.n, qn.l
    q = math.exp(tau)
    # q - 1/q = 2 sinh(tau) is exact near tau = 0 where the difference cancels
    casimir_factor = q * 2.0 * math.sinh(tau) / q_number(2, tau)
    return q_number(n, tau) * q ** (n + 1) - casimir_factor * q_number(l, tau) * q_number(l + 1, tau)


def energy(qn: QuantumNumbers | tuple[int, int], p: QhoParams) -> float:
    return p.hbar_omega0 * e_q(qn, p.tau)


def vfo_energy(e: float, p: QhoParams) -> float:
    """Anharmonic energy ``e - epsilon * e**2``.

    Only order preserving for ``e < 1 / (2 epsilon)``; callers that sort
    levels must check this themselves.
    """
    return e - p.epsilon * e * e


def taylor_energy(qn: QuantumNumbers | tuple[int, int], tau: float) -> float:
    """Second-order small-tau expansion of :func:`e_q`."""
    qn = _as_qn(qn)
    n, l = qn.n, qn.l
    ll = l * (l + 1)
    return n - tau * (ll - n * (n + 1)) - tau * tau * (ll - n * (n + 1) * (2 * n + 1) / 3.0)
