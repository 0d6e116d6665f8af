"""
Cross-checks between exact intersection theory and lattice counting.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from app.core.divisor import QDivisor
from app.multiplicity.forms import Exponent, mixed_polynomial, volume
from app.oracle.filtration import OracleFiltrationSpec, filtration_ideal
from app.oracle.fitting import LimitFit, colength_sequence, limit_fit, mixed_poly_oracle
from app.oracle.ideals import MonomialValuation
from app.oracle.toric import ToricConfig, toric_config
from app.utils.logger import get_logger
from app.utils.rationals import format_rational
from app.zariski.decomposition import ceil_scale, decompose

logger = get_logger(__name__)


def ceiling_witness(toric: ToricConfig, spec: OracleFiltrationSpec, depth: int = 50) -> bool:
    """
    Check I(nD) = I(ceil(n Delta)) on monomials for n = 1..N.

    Args:
        toric: Toric configuration containing every valuation of ``spec``
        spec: Filtration realizing D
        depth: N

    Returns:
        True when the ideals agree for every n
    """
    decomposition = decompose(toric.config, toric.divisor_for(spec))
    for n in range(1, depth + 1):
        if filtration_ideal(spec, n) != toric.ideal_of(ceil_scale(decomposition, n)):
            logger.warning(f"Ceiling witness fails at n={n}")
            return False
    return True


def ideal_certificates(
    toric: ToricConfig, d1: QDivisor, d2: QDivisor, depth: int = 50
) -> List[bool]:
    """Whether I(ceil(n Delta1)) = I(ceil(n Delta2)) as monomial ideals, for n = 1..N."""
    z1 = decompose(toric.config, d1)
    z2 = decompose(toric.config, d2)
    return [
        toric.ideal_of(ceil_scale(z1, n)) == toric.ideal_of(ceil_scale(z2, n))
        for n in range(1, depth + 1)
    ]


@dataclass(frozen=True)
class VolumeComparison:
    spec: OracleFiltrationSpec
    exact: Fraction
    fit: LimitFit

    @property
    def absolute(self) -> float:
        return abs(float(self.exact) - self.fit.estimate)

    @property
    def relative(self) -> float:
        return self.absolute / float(self.exact)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "exact": format_rational(self.exact),
            "oracle": self.fit.estimate,
            "residual": self.fit.residual,
            "absolute_discrepancy": self.absolute,
            "relative_discrepancy": self.relative,
        }


@dataclass(frozen=True)
class CoefficientComparison:
    exponent: Exponent
    exact: Fraction
    estimate: float

    @property
    def absolute(self) -> float:
        return abs(float(self.exact) - self.estimate)

    @property
    def relative(self) -> float:
        return self.absolute / abs(float(self.exact)) if self.exact else self.absolute

    def to_dict(self) -> dict:
        return {
            "exponent": list(self.exponent),
            "exact": format_rational(self.exact),
            "oracle": self.estimate,
            "absolute_discrepancy": self.absolute,
            "relative_discrepancy": self.relative,
        }


@dataclass(frozen=True)
class BridgeReport:
    toric: ToricConfig
    volumes: Tuple[VolumeComparison, ...]
    polynomial: Optional[Tuple[CoefficientComparison, ...]] = None

    @property
    def max_relative_discrepancy(self) -> float:
        values = [v.relative for v in self.volumes]
        values.extend(c.relative for c in self.polynomial or ())
        return max(values)

    def to_dict(self) -> dict:
        return {
            "toric": self.toric.to_dict(),
            "volumes": [v.to_dict() for v in self.volumes],
            "polynomial": (
                [c.to_dict() for c in self.polynomial] if self.polynomial is not None else None
            ),
            "max_relative_discrepancy": self.max_relative_discrepancy,
        }


def _targets(specs: Sequence[OracleFiltrationSpec]) -> List[MonomialValuation]:
    seen: List[MonomialValuation] = []
    for spec in specs:
        for term in spec.terms:
            if term.valuation not in seen:
                seen.append(term.valuation)
    return seen


def bridge_check(
    specs: Sequence[OracleFiltrationSpec],
    window: int = 200,
    poly_window: int = 150,
    min_points: int = 8,
) -> BridgeReport:
    """
    Run the toric round trip for monomial filtrations.

    The valuations of all specs are resolved by one toric configuration; each
    spec becomes a divisor there. Exact volumes are compared with fitted
    lattice multiplicities, and for two or more specs the exact coefficients
    of G with the oracle estimates.

    Args:
        specs: Filtration specs over primitive valuations
        window: Fit window M for volumes
        poly_window: Fit window M for the mixed polynomial
        min_points: Smallest accepted fit window

    Returns:
        BridgeReport with both values and their discrepancies
    """
    toric = toric_config(_targets(specs))
    divisors = [toric.divisor_for(spec) for spec in specs]

    volumes = []
    for spec, divisor in zip(specs, divisors):
        lengths = colength_sequence(lambda m, s=spec: filtration_ideal(s, m), window)
        volumes.append(
            VolumeComparison(
                spec=spec,
                exact=volume(toric.config, divisor),
                fit=limit_fit(lengths, min_points=min_points),
            )
        )

    polynomial = None
    if len(specs) >= 2:
        exact = mixed_polynomial(toric.config, divisors)
        oracle = mixed_poly_oracle(specs, window=poly_window, min_points=min_points)
        polynomial = tuple(
            CoefficientComparison(exponent=k, exact=b, estimate=oracle.coefficients[k])
            for k, b in sorted(exact.coefficients.items(), reverse=True)
        )

    report = BridgeReport(toric=toric, volumes=tuple(volumes), polynomial=polynomial)
    logger.info(
        f"Bridge check on {len(specs)} specs: max relative discrepancy "
        f"{report.max_relative_discrepancy:.4f}"
    )
    return report
