"""
Subset-enumeration Zariski decomposition, kept as an independent oracle.
"""

from itertools import combinations
from typing import List

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig, require_valid
from app.core.intersection import is_antinef
from app.errors import InternalInvariantViolation, TooManyCurves
from app.zariski.decomposition import (
    ZariskiDecomposition,
    assemble,
    require_effective,
    solve_on_support,
)
from app.utils.logger import get_logger

logger = get_logger(__name__)


def brute_force_decompose(
    config: ExceptionalConfig, divisor: QDivisor, max_curves: int = 12
) -> ZariskiDecomposition:
    """
    Decompose by trying every candidate support.

    For each subset S, solve ((D + B) . E) = 0 on S; keep the candidates with
    B >= 0 and D + B anti-nef, and return the one below all others.

    Args:
        config: Validated configuration
        divisor: Effective divisor D
        max_curves: Enumeration cap

    Returns:
        The coefficient-wise minimal candidate

    Raises:
        TooManyCurves: If the config has more than ``max_curves`` curves
    """
    require_valid(config)
    require_effective(config, divisor)
    if config.size > max_curves:
        raise TooManyCurves(
            f"Subset enumeration is capped at {max_curves} curves, got {config.size}"
        )

    candidates: List[QDivisor] = []
    for k in range(config.size + 1):
        for support in combinations(range(config.size), k):
            b = solve_on_support(config, divisor, support)
            if not b.is_effective:
                continue
            delta = divisor + b
            if is_antinef(config, delta):
                candidates.append(delta)

    logger.debug(f"Brute force found {len(candidates)} anti-nef candidates")
    for delta in candidates:
        if all(delta <= other for other in candidates):
            return assemble(config, divisor, delta)
    raise InternalInvariantViolation("No minimal anti-nef candidate exists")
