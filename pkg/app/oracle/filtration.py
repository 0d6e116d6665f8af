"""
Filtrations cut out by monomial valuations, their tau-sequences and truncations.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from app.errors import EmptyFiltration
from app.oracle.ideals import (
    MonomialIdeal,
    MonomialValuation,
    ideal_sum,
    intersect,
    product,
    val_ideal,
)
from app.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FiltrationTerm:
    valuation: MonomialValuation
    coefficient: int

    def __post_init__(self):
        c = self.coefficient
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise EmptyFiltration(f"Coefficients must be non-negative integers, got {c!r}")


@dataclass(frozen=True)
class OracleFiltrationSpec:
    """I_n = intersection over k of I(nu_k)_{n * c_k}."""

    terms: Tuple[FiltrationTerm, ...]

    def __post_init__(self):
        if not any(t.coefficient > 0 for t in self.terms):
            raise EmptyFiltration("A filtration needs at least one positive coefficient")

    @classmethod
    def of(cls, triples: Iterable[Tuple[int, int, int]]) -> "OracleFiltrationSpec":
        """Build from (a, b, c) triples."""
        return cls(
            tuple(FiltrationTerm(MonomialValuation(a, b), c) for a, b, c in triples)
        )

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"a": t.valuation.a, "b": t.valuation.b, "c": t.coefficient}
                for t in self.terms
            ]
        }


def filtration_ideal(spec: OracleFiltrationSpec, n: int) -> MonomialIdeal:
    """
    The n-th ideal of the filtration: intersection of I(nu_k)_{n c_k}.

    Args:
        spec: Filtration terms
        n: Index

    Returns:
        The monomial ideal I_n (the unit ideal for n = 0)
    """
    ideal = MonomialIdeal.unit()
    for term in spec.terms:
        if term.coefficient > 0 and n > 0:
            ideal = intersect(ideal, val_ideal(term.valuation, n * term.coefficient))
    return ideal


def tau_sequence(
    spec: OracleFiltrationSpec, target: MonomialValuation, window: int
) -> List[int]:
    """
    tau_m = min of the target valuation over the generators of I_m, for m = 1..M.

    Args:
        spec: Filtration
        target: Valuation nu_target
        window: M

    Returns:
        [tau_1, ..., tau_M]
    """
    return [
        min(target(g) for g in filtration_ideal(spec, m)) for m in range(1, window + 1)
    ]


def subadditivity_violations(taus: Sequence[int]) -> List[Tuple[int, int]]:
    """Pairs (m, n) with m*n <= len(taus) where tau_{mn} > n * tau_m."""
    violations = []
    size = len(taus)
    for m in range(1, size + 1):
        for n in range(1, size // m + 1):
            if taus[m * n - 1] > n * taus[m - 1]:
                violations.append((m, n))
    return violations


class TruncatedFiltration:
    """
    The filtration generated by I_1, ..., I_a.

    I_{a,n} = I_n for n <= a, and for n > a the sum over alpha = 1..min(a, n-1)
    of I_{a,alpha} * I_{a,n-alpha}; ideals are memoized by n.
    """

    def __init__(self, spec: OracleFiltrationSpec, a: int):
        """
        Initialize the truncation.

        Args:
            spec: Untruncated filtration
            a: Truncation degree (a >= 1)
        """
        if isinstance(a, bool) or not isinstance(a, int) or a < 1:
            raise ValueError(f"Truncation degree must be a positive integer, got {a!r}")
        self.spec = spec
        self.a = a
        self._ideals: Dict[int, MonomialIdeal] = {0: MonomialIdeal.unit()}
        logger.debug(f"Initialized TruncatedFiltration with a={a}")

    def __call__(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError(f"Filtration index must be non-negative, got {n}")
        for k in range(len(self._ideals), n + 1):
            self._ideals[k] = self._build(k)
        return self._ideals[n]

    def _build(self, n: int) -> MonomialIdeal:
        if n <= self.a:
            return filtration_ideal(self.spec, n)
        ideal = MonomialIdeal.zero()
        for alpha in range(1, min(self.a, n - 1) + 1):
            ideal = ideal_sum(ideal, product(self._ideals[alpha], self._ideals[n - alpha]))
        return ideal


def truncate(spec: OracleFiltrationSpec, a: int) -> TruncatedFiltration:
    """The truncated filtration of ``spec`` at degree ``a`` (callable n -> ideal)."""
    return TruncatedFiltration(spec, a)
