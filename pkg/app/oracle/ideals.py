"""
Monomial ideals in two variables and monomial valuation ideals.

A monomial ideal of k[x, y] is stored as its staircase: the minimal generators
x^i y^j as an antichain of exponent pairs, sorted by increasing i (hence
strictly decreasing j).
"""

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from app.errors import InfiniteColength, InvalidValuation
from app.utils.logger import get_logger

logger = get_logger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class MonomialValuation:
    """The monomial valuation nu(x^i y^j) = a*i + b*j."""

    a: int
    b: int

    def __post_init__(self):
        for name, value in (("a", self.a), ("b", self.b)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidValuation(f"Valuation weight {name} must be a positive integer, got {value!r}")

    @property
    def multiplier(self) -> int:
        """g = gcd(a, b); the valuation is g times a divisorial one."""
        return math.gcd(self.a, self.b)

    @property
    def is_divisorial(self) -> bool:
        return self.multiplier == 1

    def primitive(self) -> "MonomialValuation":
        g = self.multiplier
        return MonomialValuation(self.a // g, self.b // g)

    def __call__(self, point: Point) -> int:
        i, j = point
        return self.a * i + self.b * j

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b}

    def __str__(self) -> str:
        return f"nu({self.a},{self.b})"


def minimalize(points: Iterable[Point]) -> Tuple[Point, ...]:
    """
    Reduce exponent points to the minimal antichain generating the same ideal.

    Args:
        points: Exponent pairs (i, j)

    Returns:
        Minimal generators sorted by increasing i
    """
    staircase: List[Point] = []
    lowest_j = None
    for i, j in sorted(set(points)):
        if lowest_j is None or j < lowest_j:
            staircase.append((i, j))
            lowest_j = j
    return tuple(staircase)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators."""

    generators: Tuple[Point, ...]

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "MonomialIdeal":
        checked = []
        for i, j in points:
            if i < 0 or j < 0:
                raise ValueError(f"Exponents must be non-negative, got {(i, j)}")
            checked.append((int(i), int(j)))
        return cls(minimalize(checked))

    @classmethod
    def unit(cls) -> "MonomialIdeal":
        return cls(((0, 0),))

    @classmethod
    def zero(cls) -> "MonomialIdeal":
        return cls(())

    def __iter__(self) -> Iterator[Point]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, point: Point) -> bool:
        """Whether the monomial x^i y^j lies in the ideal."""
        i, j = point
        return any(i >= gi and j >= gj for gi, gj in self.generators)

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0, 0),)

    @property
    def is_primary(self) -> bool:
        """Finite colength: a pure power of y and a pure power of x are present."""
        return bool(self.generators) and self.generators[0][0] == 0 and self.generators[-1][1] == 0

    def to_list(self) -> List[List[int]]:
        return [[i, j] for i, j in self.generators]


def val_ideal(valuation: MonomialValuation, n: int) -> MonomialIdeal:
    """
    The valuation ideal {f : nu(f) >= n} of a monomial valuation.

    Args:
        valuation: nu = (a, b)
        n: Threshold

    Returns:
        Staircase of the ideal generated by x^i y^j with a*i + b*j >= n
    """
    if n <= 0:
        return MonomialIdeal.unit()
    a, b = valuation.a, valuation.b
    points = []
    for j in range(-(-n // b) + 1):
        i = max(0, -(-(n - b * j) // a))
        points.append((i, j))
    return MonomialIdeal(minimalize(points))


def _height(ideal: MonomialIdeal, columns: List[int], i: int) -> Optional[int]:
    """Smallest j with x^i y^j in the ideal, or None if column i is empty."""
    idx = bisect_right(columns, i) - 1
    return ideal.generators[idx][1] if idx >= 0 else None


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """
    Intersection: componentwise maxima of generator pairs, minimalized.

    Both staircases are step functions of i that only change at generator
    columns, so only those columns can carry a corner of the intersection.
    """
    first_cols = [i for i, _ in first]
    second_cols = [i for i, _ in second]
    points = []
    for i in sorted(set(first_cols) | set(second_cols)):
        j1 = _height(first, first_cols, i)
        j2 = _height(second, second_cols, i)
        if j1 is not None and j2 is not None:
            points.append((i, max(j1, j2)))
    return MonomialIdeal(minimalize(points))


def product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """Product: componentwise sums of generator pairs, minimalized."""
    return MonomialIdeal(
        minimalize((i1 + i2, j1 + j2) for i1, j1 in first for i2, j2 in second)
    )


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """Sum: union of generators, minimalized."""
    return MonomialIdeal(minimalize(list(first) + list(second)))


def contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """Whether ``small`` is contained in ``big``."""
    return all(g in big for g in small)


def colength(ideal: MonomialIdeal) -> int:
    """
    Number of standard monomials, i.e. lattice points under the staircase.

    Between consecutive corners (i_t, j_t) and (i_{t+1}, j_{t+1}) every column
    holds exactly j_t standard monomials.

    Args:
        ideal: An m-primary monomial ideal

    Returns:
        The length of k[x, y] / I

    Raises:
        InfiniteColength: If the ideal is not m-primary
    """
    if not ideal.is_primary:
        raise InfiniteColength(f"Ideal with generators {ideal.to_list()} has infinite colength")
    gens = ideal.generators
    return sum((gens[t + 1][0] - gens[t][0]) * gens[t][1] for t in range(len(gens) - 1))
