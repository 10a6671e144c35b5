"""Exception types raised by the qvfo modules.

Every class carries a ``code`` used by the CLI for its machine-readable
error record.
"""

from __future__ import annotations


class QvfoError(Exception):
    """Base class for all library errors."""

    code = "QvfoError"


class ConfigError(QvfoError, ValueError):
    code = "ConfigError"


class ComputationError(QvfoError):
    """Numerical failure or a model precondition that does not hold."""

    code = "ComputationError"


class InversionBeforeNmax(ComputationError):
    """Level order inverts inside a shell at or below the truncation shell."""

    code = "InversionBeforeNmax"


class NonMonotoneVfo(ComputationError):
    code = "NonMonotoneVfo"


class CutExceedsScheme(ComputationError):
    code = "CutExceedsScheme"


class RankDeficient(ComputationError):
    code = "RankDeficient"


class TooFewExtrema(ComputationError):
    code = "TooFewExtrema"


class RangeOutOfTable(ComputationError):
    code = "RangeOutOfTable"


class EmptyInput(ComputationError):
    code = "EmptyInput"
