"""
Zariski decomposition of effective exceptional divisors.

For an effective D the anti-nef part is the unique minimal effective anti-nef
Q-divisor Delta >= D; it is D + B with B effective and (Delta . E) = 0 for every
component E of B.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Set

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig, require_valid
from app.core.intersection import pairings
from app.core.linalg import solve
from app.errors import DimensionMismatch, InternalInvariantViolation, NotEffective
from app.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ZariskiDecomposition:
    """Delta = D + B with Delta anti-nef and B effective."""

    D: QDivisor
    Delta: QDivisor
    B: QDivisor
    null_support: FrozenSet[int]

    def to_dict(self) -> dict:
        return {
            "D": self.D.to_strings(),
            "Delta": self.Delta.to_strings(),
            "B": self.B.to_strings(),
            "null_support": sorted(self.null_support),
        }


def require_effective(config: ExceptionalConfig, divisor: QDivisor) -> QDivisor:
    """Check that ``divisor`` lives on ``config`` and is effective."""
    if len(divisor) != config.size:
        raise DimensionMismatch(
            f"Divisor has {len(divisor)} coefficients, config has {config.size} curves"
        )
    if not divisor.is_effective:
        negative = [i for i, a in enumerate(divisor) if a < 0]
        raise NotEffective("Divisor has negative coefficients", negative)
    return divisor


def solve_on_support(
    config: ExceptionalConfig, divisor: QDivisor, support: Sequence[int]
) -> QDivisor:
    """
    Find B supported on ``support`` with ((D + B) . E) = 0 for every E in it.

    Principal submatrices of a negative-definite form are invertible, so the
    square system always has a unique solution.

    Args:
        config: Validated configuration
        divisor: The divisor D
        support: Curve indices carrying B

    Returns:
        The correction B (zero off ``support``)
    """
    coefficients = [Fraction(0)] * config.size
    if support:
        base = pairings(config, divisor)
        block = [[config.gram[i][j] for j in support] for i in support]
        solution = solve(block, [-base[i] for i in support])
        for i, b in zip(support, solution):
            coefficients[i] = b
    return QDivisor(tuple(coefficients))


def assemble(config: ExceptionalConfig, divisor: QDivisor, delta: QDivisor) -> ZariskiDecomposition:
    """Package Delta with its effective part and null locus."""
    null = frozenset(i for i, p in enumerate(pairings(config, delta)) if p == 0)
    return ZariskiDecomposition(D=divisor, Delta=delta, B=delta - divisor, null_support=null)


def decompose(config: ExceptionalConfig, divisor: QDivisor) -> ZariskiDecomposition:
    """
    Compute the Zariski decomposition by growing the support of B.

    Starting from S = {}, solve ((D + B) . E') = 0 on S, then add every curve
    that pairs positively with Delta = D + B; stop once Delta is anti-nef. S
    only grows, so at most s rounds are needed.

    Args:
        config: Validated configuration
        divisor: Effective divisor D

    Returns:
        The decomposition Delta = D + B

    Raises:
        NotEffective: If D has a negative coefficient
        InternalInvariantViolation: If the solution has a negative B coefficient
    """
    require_valid(config)
    require_effective(config, divisor)

    support: Set[int] = set()
    for _ in range(config.size + 1):
        b = solve_on_support(config, divisor, sorted(support))
        delta = divisor + b
        positive = [i for i, p in enumerate(pairings(config, delta)) if p > 0]
        if not positive:
            break
        support.update(positive)
    else:
        raise InternalInvariantViolation("Support iteration did not terminate")

    if not b.is_effective:
        negative = [i for i, x in enumerate(b) if x < 0]
        logger.error(f"Negative Zariski coefficients on curves {negative}")
        raise InternalInvariantViolation("B has negative coefficients", negative)

    logger.debug(f"Decomposed {divisor} -> Delta = {delta} (support {sorted(support)})")
    return assemble(config, divisor, delta)


def ceil_scale(decomposition: ZariskiDecomposition, n: int) -> QDivisor:
    """
    Return the integral divisor ceil(n * Delta).

    Args:
        decomposition: A Zariski decomposition
        n: Positive multiple

    Returns:
        The componentwise round-up of n * Delta
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return (decomposition.Delta * n).ceil()


def anti_nef_parts(config: ExceptionalConfig, divisors: Sequence[QDivisor]) -> List[QDivisor]:
    """Delta of every divisor, in order."""
    return [decompose(config, d).Delta for d in divisors]
