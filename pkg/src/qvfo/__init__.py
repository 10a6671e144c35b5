"""Shell structure of metal clusters from the 3D q-deformed harmonic oscillator.

The package evaluates the q-oscillator spectrum with its variable frequency
extension ``E - epsilon E**2`` and reads magic numbers off the level gaps.
Total energies are split into liquid-drop and shell parts, and the magic
numbers can be compared with periodic-orbit slopes.
"""

__version__ = "0.1.0"

from .core import QhoParams, QuantumNumbers, allowed_l, e_q, energy, q_number, taylor_energy, vfo_energy
from .errors import (
    ComputationError,
    ConfigError,
    CutExceedsScheme,
    EmptyInput,
    InversionBeforeNmax,
    NonMonotoneVfo,
    QvfoError,
    RangeOutOfTable,
    RankDeficient,
    TooFewExtrema,
)
from .orbits import CavityModel, SlopeFit, balian_bloch_slope, cavity_radius, fit_cuberoot_line, orbit_length
from .shells import (
    EnergySeries,
    LiquidDropFit,
    ShellDecomposition,
    beat_node,
    liquid_drop_fit,
    shell_decomposition,
    total_energy_series,
    window_samples,
)
from .spectrum import Level, LevelScheme, MagicTable, build_scheme, detect_inversion, magic_numbers
from .variational import (
    MorseParams,
    VmiParams,
    morse_spectrum,
    qvfo_energy,
    qvfo_frequency,
    vho_spectrum,
    vmi_energy,
    vmi_theta,
)
