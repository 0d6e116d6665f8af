"""
Numeric limits of colength sequences.

The multiplicity of a filtration is lim 2 * l(R/I_m) / m^2. For monomial data
l_m is a quadratic in m plus bounded periodic terms, so a least-squares
quadratic on the upper half of the window recovers the leading coefficient.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from app.errors import DimensionMismatch, TooFewPoints
from app.multiplicity.forms import Exponent, degree_two_exponents
from app.oracle.filtration import OracleFiltrationSpec, filtration_ideal
from app.oracle.ideals import MonomialIdeal, colength, product
from app.utils.logger import get_logger

logger = get_logger(__name__)

GridPoint = Tuple[int, ...]


@dataclass(frozen=True)
class LimitFit:
    """Fitted multiplicity 2 * c2 and the RMS residual of the quadratic fit."""

    estimate: float
    residual: float
    window: int

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "residual": self.residual,
            "window": self.window,
        }


def limit_fit(lengths: Sequence[int], min_points: int = 8) -> LimitFit:
    """
    Fit l_m = c2 m^2 + c1 m + c0 over m in (M/2, M].

    Args:
        lengths: l_1, ..., l_M
        min_points: Smallest accepted M

    Returns:
        LimitFit with estimate 2 * c2

    Raises:
        TooFewPoints: If M < min_points
    """
    window = len(lengths)
    if window < max(min_points, 3):
        raise TooFewPoints(f"limit_fit needs at least {min_points} lengths, got {window}")

    m = np.arange(window // 2 + 1, window + 1, dtype=float)
    values = np.asarray(lengths[window // 2:], dtype=float)
    coefficients = np.polyfit(m, values, 2)
    fitted = np.polyval(coefficients, m)
    residual = float(np.sqrt(np.mean((values - fitted) ** 2)))
    estimate = float(2.0 * coefficients[0])

    logger.debug(f"limit_fit over M={window}: estimate={estimate:.6f}, residual={residual:.3g}")
    return LimitFit(estimate=estimate, residual=residual, window=window)


def colength_sequence(ideal_of: Callable[[int], MonomialIdeal], window: int) -> List[int]:
    """l(R/I_m) for m = 1..M, where I_m = ideal_of(m)."""
    return [colength(ideal_of(m)) for m in range(1, window + 1)]


def sequence_frame(values: Sequence[int], column: str = "length") -> pd.DataFrame:
    """Sequence indexed by m = 1..M as a two-column frame (m, column)."""
    return pd.DataFrame({"m": range(1, len(values) + 1), column: list(values)})


def sequence_csv(values: Sequence[int], column: str = "length") -> str:
    """CSV export with header ``m,<column>`` for external plotting."""
    return sequence_frame(values, column).to_csv(index=False, lineterminator="\n")


@dataclass(frozen=True)
class PolynomialFit:
    """Least-squares estimates of the coefficients of G from grid limits."""

    variables: int
    coefficients: Dict[Exponent, float]
    grid: Tuple[GridPoint, ...]
    grid_fits: Tuple[LimitFit, ...]
    residual: float

    def evaluate(self, point: Sequence[int]) -> float:
        total = 0.0
        for k, b in self.coefficients.items():
            term = b
            for n, e in zip(point, k):
                term *= n**e
            total += term
        return total

    def to_dict(self) -> dict:
        return {
            "variables": self.variables,
            "coefficients": [
                {"exponent": list(k), "estimate": b}
                for k, b in sorted(self.coefficients.items(), reverse=True)
            ],
            "grid": [
                {"point": list(p), "G": fit.estimate / 2, "residual": fit.residual}
                for p, fit in zip(self.grid, self.grid_fits)
            ],
            "residual": self.residual,
        }


def default_grid(r: int) -> List[GridPoint]:
    """Unit vectors followed by the pairwise sums e_i + e_j, i < j."""
    units = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    pairs = [
        tuple(a + b for a, b in zip(units[i], units[j]))
        for i in range(r)
        for j in range(i + 1, r)
    ]
    return units + pairs


def product_ideal(specs: Sequence[OracleFiltrationSpec], point: GridPoint, m: int) -> MonomialIdeal:
    """The product of filtration_ideal(spec_k, m * n_k) over k."""
    ideal = MonomialIdeal.unit()
    for spec, n in zip(specs, point):
        if n:
            ideal = product(ideal, filtration_ideal(spec, m * n))
    return ideal


def mixed_poly_oracle(
    specs: Sequence[OracleFiltrationSpec],
    n_grid: Optional[Sequence[GridPoint]] = None,
    window: int = 150,
    min_points: int = 8,
) -> PolynomialFit:
    """
    Estimate the homogeneous quadratic G from lattice counts.

    For every grid point n the colengths of the products of I(k)_{m n_k},
    m = 1..M, are fitted; the m^2 coefficient is G(n). The coefficients of G
    are then recovered by least squares over the grid.

    Args:
        specs: One filtration per variable
        n_grid: Grid points (defaults to :func:`default_grid`)
        window: Fit window M
        min_points: Smallest accepted M

    Returns:
        PolynomialFit with one estimate per degree-two exponent

    Raises:
        TooFewPoints: If the window or the grid is too small
        InfiniteColength: If some product ideal is not m-primary
    """
    r = len(specs)
    grid = [tuple(int(n) for n in p) for p in (n_grid or default_grid(r))]
    for p in grid:
        if len(p) != r:
            raise DimensionMismatch(f"Grid point {p} does not have {r} entries")
        if any(n < 0 for n in p) or not any(p):
            raise DimensionMismatch(f"Grid point {p} must be non-negative and nonzero")
    exponents = degree_two_exponents(r)
    if len(grid) < len(exponents):
        raise TooFewPoints(f"{len(exponents)} coefficients need at least as many grid points, got {len(grid)}")

    fits = []
    for point in grid:
        lengths = colength_sequence(lambda m, p=point: product_ideal(specs, p, m), window)
        fits.append(limit_fit(lengths, min_points=min_points))

    design = np.array(
        [[float(np.prod([n**e for n, e in zip(p, k)])) for k in exponents] for p in grid]
    )
    targets = np.array([fit.estimate / 2 for fit in fits])
    solution, _, _, _ = np.linalg.lstsq(design, targets, rcond=None)
    residual = float(np.linalg.norm(design @ solution - targets))

    logger.info(f"Fitted G on {len(grid)} grid points with window M={window}")
    return PolynomialFit(
        variables=r,
        coefficients={k: float(b) for k, b in zip(exponents, solution)},
        grid=tuple(grid),
        grid_fits=tuple(fits),
        residual=residual,
    )
