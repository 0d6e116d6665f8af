"""
Exact rational parsing and formatting.

Rationals cross every external boundary as strings ``"p/q"`` (``"p"`` when
q = 1) in lowest terms with a positive denominator. Floats are rejected so that
no binary rounding leaks into the intersection-theory path.
"""

from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Union

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Convert an int, Fraction or ``"p/q"`` string into a Fraction.

    Args:
        value: Value to convert

    Returns:
        The exact rational value

    Raises:
        ValueError: For floats, booleans, malformed strings or zero denominators
    """
    if isinstance(value, bool):
        raise ValueError(f"Boolean is not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"Not an exact rational: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not an exact rational: {value!r}") from e
    raise ValueError(f"Not an exact rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Format a rational as ``"p/q"``, or ``"p"`` for integers."""
    return str(Fraction(value))


def format_vector(values: Iterable[Fraction]) -> List[str]:
    """Format a coefficient vector."""
    return [format_rational(v) for v in values]
