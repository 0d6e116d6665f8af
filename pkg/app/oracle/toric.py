"""
Smooth toric resolutions of monomial valuations.

Rays are primitive vectors (p, q) of the positive quadrant ordered by slope
q/p from (1, 0) to (0, 1); every interior ray v is an exceptional curve E_v
whose valuation is nu_v(x^i y^j) = p*i + q*j.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig, require_valid
from app.errors import (
    DimensionMismatch,
    InternalInvariantViolation,
    InvalidValuation,
    NonPrimitiveTarget,
)
from app.multiplicity.forms import volume
from app.oracle.filtration import OracleFiltrationSpec
from app.oracle.ideals import MonomialIdeal, MonomialValuation, intersect, val_ideal
from app.utils.logger import get_logger

logger = get_logger(__name__)

Ray = Tuple[int, int]


def _cross(u: Ray, w: Ray) -> int:
    return u[0] * w[1] - u[1] * w[0]


def _refine(fan: List[Ray], target: Ray) -> None:
    """Insert Stern-Brocot mediants into ``fan`` until ``target`` is a ray."""
    while target not in fan:
        for k in range(len(fan) - 1):
            u, w = fan[k], fan[k + 1]
            if _cross(u, target) > 0 and _cross(target, w) > 0:
                fan.insert(k + 1, (u[0] + w[0], u[1] + w[1]))
                break
        else:
            raise InternalInvariantViolation(f"No cone of the fan contains {target}")


@dataclass(frozen=True)
class ToricConfig:
    """An exceptional configuration together with the rays of its curves."""

    config: ExceptionalConfig
    rays: Tuple[Ray, ...]
    prime_index: Tuple[int, ...]
    targets: Tuple[MonomialValuation, ...]

    def index_of(self, valuation: MonomialValuation) -> int:
        """Curve index of a primitive valuation whose ray lies in the fan."""
        if not valuation.is_divisorial:
            raise NonPrimitiveTarget(f"{valuation} is {valuation.multiplier} times a divisorial valuation")
        ray = (valuation.a, valuation.b)
        if ray not in self.rays:
            raise InvalidValuation(f"{valuation} is not a curve of this toric configuration")
        return self.rays.index(ray)

    def divisor_for(self, spec: OracleFiltrationSpec) -> QDivisor:
        """The divisor sum of c_k E_{p_k} realizing a filtration spec."""
        coefficients = [Fraction(0)] * self.config.size
        for term in spec.terms:
            coefficients[self.index_of(term.valuation)] += term.coefficient
        return QDivisor(tuple(coefficients))

    def ideal_of(self, divisor: QDivisor) -> MonomialIdeal:
        """
        Gamma(X, O(-D)) for an integral D: the intersection of the valuation
        ideals I(nu_v)_{d_v} over every curve v.
        """
        if len(divisor) != self.config.size:
            raise DimensionMismatch(
                f"Divisor has {len(divisor)} coefficients, toric config has {self.config.size} curves"
            )
        if not divisor.is_integral:
            raise ValueError(f"ideal_of needs an integral divisor, got {divisor}")
        ideal = MonomialIdeal.unit()
        for (p, q), d in zip(self.rays, divisor):
            if d > 0:
                ideal = intersect(ideal, val_ideal(MonomialValuation(p, q), int(d)))
        return ideal

    def to_dict(self) -> dict:
        return {
            "curves": list(self.config.curve_labels),
            "rays": [list(r) for r in self.rays],
            "gram": [list(row) for row in self.config.gram],
            "targets": [t.to_dict() for t in self.targets],
            "prime_index": list(self.prime_index),
        }


def toric_config(targets: Sequence[MonomialValuation]) -> ToricConfig:
    """
    Build the minimal smooth fan containing every target ray.

    Starting from the cone spanned by (1, 0) and (0, 1), mediants of adjacent
    rays are inserted until each target is a ray; adjacent rays then have
    determinant 1. With v_{i-1} + v_{i+1} = c_i v_i the curve of v_i has
    E_i^2 = -c_i, and consecutive interior curves meet once.

    Args:
        targets: Primitive monomial valuations

    Returns:
        ToricConfig with one curve per interior ray and the curve index of
        every target

    Raises:
        NonPrimitiveTarget: If some target has gcd(a, b) > 1
    """
    if not targets:
        raise InvalidValuation("toric_config needs at least one target")
    for t in targets:
        if not t.is_divisorial:
            raise NonPrimitiveTarget(f"Target {t} is not primitive (gcd {t.multiplier})")

    fan: List[Ray] = [(1, 0), (0, 1)]
    for t in targets:
        _refine(fan, (t.a, t.b))
    for u, w in zip(fan, fan[1:]):
        if _cross(u, w) != 1:
            logger.error(f"Adjacent rays {u}, {w} do not span a smooth cone")
            raise InternalInvariantViolation(f"Adjacent rays {u}, {w} have determinant {_cross(u, w)}")

    interior = fan[1:-1]
    s = len(interior)
    gram = [[0] * s for _ in range(s)]
    for i, v in enumerate(interior):
        before, after = fan[i], fan[i + 2]
        total = (before[0] + after[0], before[1] + after[1])
        c = total[0] // v[0] if v[0] else total[1] // v[1]
        if (c * v[0], c * v[1]) != total:
            raise InternalInvariantViolation(f"Neighbours of ray {v} do not sum to a multiple of it")
        gram[i][i] = -c
        if i + 1 < s:
            gram[i][i + 1] = gram[i + 1][i] = 1

    config = require_valid(
        ExceptionalConfig.build(gram, labels=[f"E({p},{q})" for p, q in interior])
    )
    rays = tuple(interior)
    prime_index = tuple(rays.index((t.a, t.b)) for t in targets)
    toric = ToricConfig(config=config, rays=rays, prime_index=prime_index, targets=tuple(targets))

    for t, p in zip(targets, prime_index):
        vol = volume(config, QDivisor.prime(s, p))
        if vol != Fraction(1, t.a * t.b):
            logger.error(f"Volume of E_{t} is {vol}, expected 1/{t.a * t.b}")
            raise InternalInvariantViolation(f"Volume postcondition failed for {t}", [p])

    logger.debug(f"Toric config for {[str(t) for t in targets]}: {s} curves")
    return toric
