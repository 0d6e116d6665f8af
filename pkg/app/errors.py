"""
Exception hierarchy shared by the library and the command line.

Every error carries a stable ``code`` (its class name) that the CLI prints as
the diagnostic prefix, and optionally the curve or generator indices it refers to.
"""

from typing import Optional, Sequence, Tuple


class ZariskiError(Exception):
    """Base class for all errors raised by the package."""

    def __init__(self, message: str, indices: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.message = message
        self.indices: Tuple[int, ...] = tuple(indices) if indices is not None else ()

    @property
    def code(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        if self.indices:
            return f"{self.message} (indices {list(self.indices)})"
        return self.message


class InputError(ZariskiError, ValueError):
    """Input that violates a documented precondition."""


class InternalInvariantViolation(ZariskiError, AssertionError):
    """A result broke a guaranteed invariant; this is a bug, not bad input."""


# Configuration violations

class ConfigError(InputError):
    """Base class for violated exceptional-configuration invariants."""


class AsymmetricMatrix(ConfigError):
    pass


class NotNegativeDefinite(ConfigError):
    pass


class PositiveDiagonal(ConfigError):
    pass


class NegativeOffDiagonal(ConfigError):
    pass


class CrossBranchIntersection(ConfigError):
    pass


class DisconnectedBranch(ConfigError):
    pass


class InvalidBranchPartition(ConfigError):
    pass


class WeightMismatch(ConfigError):
    pass


class NonIntegerEntry(ConfigError):
    pass


# Divisors and decompositions

class DimensionMismatch(InputError):
    pass


class NotEffective(InputError):
    pass


class NotDominated(InputError):
    pass


class ZeroDivisor(InputError):
    pass


class SameIndex(InputError):
    pass


class TooManyCurves(InputError):
    pass


# Monomial oracle

class TooFewPoints(InputError):
    pass


class InfiniteColength(InputError):
    pass


class NonPrimitiveTarget(InputError):
    pass


class InvalidValuation(InputError):
    pass


class EmptyFiltration(InputError):
    pass


# Command line

class CliError(ZariskiError):
    """Errors in the command-line surface; always exit code 2."""

    exit_code = 2


class SchemaError(CliError):
    pass


class FileNotFound(CliError):
    pass


class UnknownCommand(CliError):
    pass


class UnsupportedFormat(CliError):
    pass
