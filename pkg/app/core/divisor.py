"""
Exact rational divisors supported on the exceptional curves.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Tuple

from app.errors import DimensionMismatch
from app.utils.rationals import RationalLike, format_vector, parse_rational


@dataclass(frozen=True)
class QDivisor:
    """
    A Q-divisor: one exact rational coefficient per curve of a fixed config.

    Divisors are compared with the componentwise partial order, so ``D1 <= D2``
    means every coefficient of ``D1`` is at most the matching one of ``D2``.
    """

    coefficients: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> "QDivisor":
        """Build a divisor from ints, Fractions or ``"p/q"`` strings."""
        return cls(tuple(parse_rational(v) for v in values))

    @classmethod
    def zero(cls, size: int) -> "QDivisor":
        return cls((Fraction(0),) * size)

    @classmethod
    def prime(cls, size: int, index: int) -> "QDivisor":
        """The divisor of a single curve ``E_index``."""
        if not 0 <= index < size:
            raise DimensionMismatch(f"Curve index {index} outside 0..{size - 1}", (index,))
        return cls(tuple(Fraction(int(i == index)) for i in range(size)))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coefficients)

    def __getitem__(self, index: int) -> Fraction:
        return self.coefficients[index]

    def _check(self, other: "QDivisor") -> None:
        if len(self) != len(other):
            raise DimensionMismatch(
                f"Divisors of length {len(self)} and {len(other)} are not comparable"
            )

    def __add__(self, other: "QDivisor") -> "QDivisor":
        self._check(other)
        return QDivisor(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        self._check(other)
        return QDivisor(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "QDivisor":
        return QDivisor(tuple(-a for a in self))

    def __mul__(self, scalar: RationalLike) -> "QDivisor":
        c = parse_rational(scalar)
        return QDivisor(tuple(c * a for a in self))

    __rmul__ = __mul__

    def __le__(self, other: "QDivisor") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def __ge__(self, other: "QDivisor") -> bool:
        return other <= self

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self)

    @property
    def is_effective(self) -> bool:
        return all(a >= 0 for a in self)

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, a in enumerate(self) if a != 0)

    def ceil(self) -> "QDivisor":
        """Componentwise round-up."""
        return QDivisor(tuple(Fraction(math.ceil(a)) for a in self))

    def restrict(self, indices: Iterable[int]) -> "QDivisor":
        """Coefficients on ``indices`` only, as a shorter divisor."""
        return QDivisor(tuple(self.coefficients[i] for i in indices))

    def to_strings(self) -> List[str]:
        return format_vector(self)

    def __str__(self) -> str:
        terms = [f"{a}*E{i + 1}" for i, a in enumerate(self) if a != 0]
        return " + ".join(terms) if terms else "0"
