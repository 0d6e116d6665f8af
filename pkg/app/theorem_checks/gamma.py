"""
Candidate values of gamma_{E_i}(D) = inf_m tau_{E_i, m}(D) / m.

The coefficients of the anti-nef part Delta of D are reported as candidates for
gamma_{E_i}(D). The identification is checked against lattice tau-sequences on
toric configurations; it is not asserted as a theorem, and the report says so.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig
from app.utils.rationals import format_vector
from app.zariski.decomposition import decompose

EXPERIMENTAL = "experimental"


@dataclass(frozen=True)
class GammaCandidates:
    labels: Tuple[str, ...]
    values: Tuple[Fraction, ...]
    status: str = EXPERIMENTAL

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "gamma": format_vector(self.values),
            "status": self.status,
        }


def gamma(config: ExceptionalConfig, divisor: QDivisor) -> GammaCandidates:
    """Delta-coefficients of D labelled as gamma candidates (status: experimental)."""
    delta = decompose(config, divisor).Delta
    return GammaCandidates(labels=config.curve_labels, values=delta.coefficients)
