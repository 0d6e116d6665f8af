"""
Branch-weighted mixed multiplicities.

When the normalization has several maximal ideals m_1..m_t, each divisor splits
into its branch pieces D(j)_t, and every intersection number is summed over the
branches with weight [S/m_t : R/m_R].
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig, require_valid
from app.core.intersection import pair
from app.errors import WeightMismatch
from app.multiplicity.forms import MixedMultiplicityForm
from app.utils.logger import get_logger
from app.zariski.decomposition import decompose, require_effective

logger = get_logger(__name__)


def _check_weights(config: ExceptionalConfig, weights: Sequence[int]) -> List[int]:
    weights = list(weights)
    if len(weights) != len(config.branches):
        raise WeightMismatch(
            f"{len(weights)} weights supplied for {len(config.branches)} branches"
        )
    bad = [t for t, w in enumerate(weights) if isinstance(w, bool) or int(w) != w or w <= 0]
    if bad:
        raise WeightMismatch("Branch weights must be positive integers", bad)
    return [int(w) for w in weights]


def weighted_mixed(
    config: ExceptionalConfig,
    divisors: Sequence[QDivisor],
    weights: Optional[Sequence[int]] = None,
) -> MixedMultiplicityForm:
    """
    Weight-summed mixed multiplicity form over the branches of ``config``.

    Args:
        config: Validated configuration with its branch partition
        divisors: Effective divisors D(1)..D(r)
        weights: Branch weights overriding ``config.branch_weights``

    Returns:
        Form with matrix(j, k) = sum_t -w_t (Delta(j)_t . Delta(k)_t)

    Raises:
        WeightMismatch: If the weights do not match the branches
    """
    weights = _check_weights(
        config, config.branch_weights if weights is None else weights
    )
    require_valid(config)
    for d in divisors:
        require_effective(config, d)

    r = len(divisors)
    rows = [[Fraction(0)] * r for _ in range(r)]
    full_deltas = [[Fraction(0)] * config.size for _ in range(r)]

    for t, w in enumerate(weights):
        sub, indices = config.restrict_to_branch(t)
        pieces = [decompose(sub, d.restrict(indices)).Delta for d in divisors]
        for j, piece in enumerate(pieces):
            for i, coefficient in zip(indices, piece):
                full_deltas[j][i] = coefficient
        for j in range(r):
            for k in range(j, r):
                contribution = -w * pair(sub, pieces[j], pieces[k])
                rows[j][k] += contribution
                if k != j:
                    rows[k][j] += contribution

    logger.debug(f"Weighted form over {len(weights)} branches with weights {weights}")
    return MixedMultiplicityForm(
        divisors=tuple(divisors),
        deltas=tuple(QDivisor(tuple(d)) for d in full_deltas),
        matrix=tuple(tuple(row) for row in rows),
        weights_applied=True,
    )


def weighted_volume(
    config: ExceptionalConfig,
    divisor: QDivisor,
    weights: Optional[Sequence[int]] = None,
) -> Fraction:
    """Multi-branch volume: sum_t -w_t (Delta_t^2)."""
    return weighted_mixed(config, [divisor], weights).entry(0, 0)
