"""
Volumes, mixed multiplicities and the multiplicity polynomial in dimension 2.

For effective divisors D_1..D_r with anti-nef parts Delta_i the mixed
multiplicities are e(i, j) = -(Delta_i . Delta_j), and

    G(n_1, ..., n_r) = -1/2 ((n_1 Delta_1 + ... + n_r Delta_r)^2)

is the homogeneous polynomial whose coefficient of n^k is e(type k) / k!.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig
from app.core.intersection import pair
from app.utils.logger import get_logger
from app.utils.rationals import format_rational
from app.zariski.decomposition import anti_nef_parts, decompose

logger = get_logger(__name__)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class MixedMultiplicityForm:
    """Symmetric matrix of mixed multiplicities e(i, j) = -(Delta_i . Delta_j)."""

    divisors: Tuple[QDivisor, ...]
    deltas: Tuple[QDivisor, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    weights_applied: bool = False

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def entry(self, i: int, j: int) -> Fraction:
        return self.matrix[i][j]

    def to_dict(self) -> dict:
        return {
            "divisors": [d.to_strings() for d in self.divisors],
            "deltas": [d.to_strings() for d in self.deltas],
            "matrix": [[format_rational(x) for x in row] for row in self.matrix],
            "weights_applied": self.weights_applied,
        }


@dataclass(frozen=True)
class MultiplicityPolynomial:
    """Coefficients b_k of G over all exponents k with k_1 + ... + k_r = 2."""

    coefficients: Dict[Exponent, Fraction]
    variables: int

    def evaluate(self, point: Sequence[int]) -> Fraction:
        """G at an integer (or rational) point."""
        if len(point) != self.variables:
            raise ValueError(f"Expected {self.variables} arguments, got {len(point)}")
        total = Fraction(0)
        for k, b in self.coefficients.items():
            term = b
            for n, e in zip(point, k):
                term *= Fraction(n) ** e
            total += term
        return total

    def as_expr(self) -> sympy.Expr:
        """G as a sympy polynomial in n1..nr."""
        symbols = sympy.symbols(f"n1:{self.variables + 1}")
        return sympy.expand(
            sum(
                sympy.Rational(b.numerator, b.denominator)
                * sympy.Mul(*[s**e for s, e in zip(symbols, k)])
                for k, b in self.coefficients.items()
            )
        )

    def to_dict(self) -> dict:
        return {
            "variables": self.variables,
            "coefficients": [
                {"exponent": list(k), "value": format_rational(b)}
                for k, b in sorted(self.coefficients.items(), reverse=True)
            ],
            "expression": str(self.as_expr()),
        }


def degree_two_exponents(r: int) -> List[Exponent]:
    """All exponent vectors of total degree 2 in r variables, lexicographically descending."""
    exponents = []
    for i, j in combinations_with_replacement(range(r), 2):
        k = [0] * r
        k[i] += 1
        k[j] += 1
        exponents.append(tuple(k))
    return sorted(exponents, reverse=True)


def volume(config: ExceptionalConfig, divisor: QDivisor) -> Fraction:
    """
    Multiplicity of the filtration {I(nD)}: Vol(D) = -(Delta^2).

    Args:
        config: Validated configuration
        divisor: Effective divisor D

    Returns:
        The exact volume
    """
    delta = decompose(config, divisor).Delta
    return -pair(config, delta, delta)


def form_from_deltas(
    config: ExceptionalConfig,
    divisors: Sequence[QDivisor],
    deltas: Sequence[QDivisor],
) -> MixedMultiplicityForm:
    """Intersection matrix of already-decomposed divisors."""
    r = len(deltas)
    rows: List[List[Fraction]] = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            rows[i][j] = rows[j][i] = -pair(config, deltas[i], deltas[j])
    return MixedMultiplicityForm(
        divisors=tuple(divisors),
        deltas=tuple(deltas),
        matrix=tuple(tuple(row) for row in rows),
    )


def mixed_form(config: ExceptionalConfig, divisors: Sequence[QDivisor]) -> MixedMultiplicityForm:
    """
    Mixed multiplicities of the filtrations {I(nD_i)}.

    Args:
        config: Validated configuration
        divisors: Effective divisors D_1..D_r

    Returns:
        The form with matrix(i, j) = -(Delta_i . Delta_j)
    """
    deltas = anti_nef_parts(config, divisors)
    form = form_from_deltas(config, divisors, deltas)
    logger.debug(f"Mixed form of {len(divisors)} divisors computed")
    return form


def polynomial_from_form(form: MixedMultiplicityForm) -> MultiplicityPolynomial:
    """Expand G from a mixed form using b_k = e(type k) / k!."""
    coefficients: Dict[Exponent, Fraction] = {}
    for k in degree_two_exponents(form.rank):
        i, j = [idx for idx, e in enumerate(k) for _ in range(e)]
        factorial = math.prod(math.factorial(e) for e in k)
        coefficients[k] = form.entry(i, j) / factorial
    return MultiplicityPolynomial(coefficients=coefficients, variables=form.rank)


def mixed_polynomial(
    config: ExceptionalConfig, divisors: Sequence[QDivisor]
) -> MultiplicityPolynomial:
    """G(n_1, ..., n_r) = -1/2 ((sum n_i Delta_i)^2) as a coefficient table."""
    return polynomial_from_form(mixed_form(config, divisors))


def product_multiplicity(
    config: ExceptionalConfig, d1: QDivisor, d2: QDivisor, form: Optional[MixedMultiplicityForm] = None
) -> Fraction:
    """
    Multiplicity of the product filtration {I(nD1) I(nD2)}.

    Args:
        config: Validated configuration
        d1: First effective divisor
        d2: Second effective divisor
        form: Precomputed form of (d1, d2), e.g. a weighted one

    Returns:
        e0 + 2 e1 + e2 = 2 G(1, 1)
    """
    if form is None:
        form = mixed_form(config, [d1, d2])
    return form.entry(0, 0) + 2 * form.entry(0, 1) + form.entry(1, 1)
