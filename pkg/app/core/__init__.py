"""
Exceptional configurations, exact divisors and the intersection form.
"""

from .divisor import QDivisor
from .exceptional import ExceptionalConfig, ValidationReport, require_valid, validate_config
from .intersection import is_antinef, pair, pairings

__all__ = [
    "ExceptionalConfig",
    "QDivisor",
    "ValidationReport",
    "validate_config",
    "require_valid",
    "pair",
    "pairings",
    "is_antinef",
]
