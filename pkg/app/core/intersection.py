"""
The intersection bilinear form on exceptional Q-divisors.
"""

from fractions import Fraction
from typing import Tuple

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig
from app.errors import DimensionMismatch


def _check_on(config: ExceptionalConfig, divisor: QDivisor) -> None:
    if len(divisor) != config.size:
        raise DimensionMismatch(
            f"Divisor has {len(divisor)} coefficients, config has {config.size} curves"
        )


def pairings(config: ExceptionalConfig, divisor: QDivisor) -> Tuple[Fraction, ...]:
    """
    Intersection numbers of a divisor with every curve.

    Args:
        config: Exceptional configuration
        divisor: Divisor on ``config``

    Returns:
        The vector ((D . E_1), ..., (D . E_s))
    """
    _check_on(config, divisor)
    return tuple(
        sum((Fraction(g) * d for g, d in zip(row, divisor) if d), Fraction(0))
        for row in config.gram
    )


def pair(config: ExceptionalConfig, d1: QDivisor, d2: QDivisor) -> Fraction:
    """Exact intersection number (D1 . D2) = D1^T * gram * D2."""
    _check_on(config, d1)
    return sum(
        (a * p for a, p in zip(d1, pairings(config, d2)) if a), Fraction(0)
    )


def is_antinef(config: ExceptionalConfig, divisor: QDivisor) -> bool:
    """True when (D . E_i) <= 0 for every exceptional curve."""
    return all(p <= 0 for p in pairings(config, divisor))
