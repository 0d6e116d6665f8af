"""
Exact checks of the Minkowski, Rees and gamma statements on concrete inputs.
"""

from .gamma import GammaCandidates, gamma
from .minkowski import (
    Equality,
    InequalityVerdict,
    MinkowskiReport,
    Strict,
    classify,
    minkowski_report,
    minkowski_verdicts,
    prime_distinctness,
)
from .rees import ReesReport, rees_check

__all__ = [
    "Equality",
    "Strict",
    "InequalityVerdict",
    "MinkowskiReport",
    "minkowski_report",
    "minkowski_verdicts",
    "prime_distinctness",
    "classify",
    "ReesReport",
    "rees_check",
    "GammaCandidates",
    "gamma",
]
