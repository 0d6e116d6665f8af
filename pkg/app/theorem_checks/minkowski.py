"""
Minkowski inequalities and the Minkowski-equality classification in dimension 2.

With e0 = e(I(1)^[2]), e1 = e(I(1)^[1], I(2)^[1]) and e2 = e(I(2)^[2]), every
nontrivial instance of the four inequalities reduces to e1^2 <= e0 e2. The
product inequality e(I(1)I(2))^(1/2) <= e0^(1/2) + e2^(1/2) is decided the same
way: e0 + 2 e1 + e2 <= (sqrt(e0) + sqrt(e2))^2 iff e1 <= sqrt(e0 e2), and e1 >= 0.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig
from app.errors import DimensionMismatch, InternalInvariantViolation, SameIndex, ZeroDivisor
from app.multiplicity.forms import MixedMultiplicityForm, mixed_form
from app.multiplicity.weighted import weighted_mixed
from app.utils.logger import get_logger
from app.utils.rationals import format_rational

logger = get_logger(__name__)


@dataclass(frozen=True)
class InequalityVerdict:
    """One exact comparison lhs <= rhs."""

    item: str
    statement: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_dict(self) -> dict:
        return {
            "item": self.item,
            "statement": self.statement,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class Strict:
    kind: str = field(default="strict", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class Equality:
    """Minkowski equality with a * Delta1 = b * Delta2, gcd(a, b) = 1."""

    a: int
    b: int
    kind: str = field(default="equality", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "a": self.a, "b": self.b}


EqualityCase = Union[Strict, Equality]


@dataclass(frozen=True)
class MinkowskiReport:
    e0: Fraction
    e1: Fraction
    e2: Fraction
    verdicts: Tuple[InequalityVerdict, ...]
    equality_case: EqualityCase
    product_multiplicity: Fraction
    weighted: bool = False

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "e": [format_rational(x) for x in (self.e0, self.e1, self.e2)],
            "verdicts": [v.to_dict() for v in self.verdicts],
            "all_hold": self.all_hold,
            "equality_case": self.equality_case.kind,
            "equality": self.equality_case.to_dict(),
            "product_multiplicity": format_rational(self.product_multiplicity),
            "weighted": self.weighted,
        }


def minkowski_verdicts(e0: Fraction, e1: Fraction, e2: Fraction) -> List[InequalityVerdict]:
    """Every index instance of the four inequalities at d = 2."""
    # e(I1^[2-i], I2^[i]) for i = 0, 1, 2
    e = {0: e0, 1: e1, 2: e2}
    verdicts = [InequalityVerdict("1", "e1^2 <= e0*e2 (i=1)", e1 * e1, e0 * e2)]
    for i in range(3):
        verdicts.append(
            InequalityVerdict(
                "2",
                f"e(I1^[{i}],I2^[{2 - i}]) * e(I1^[{2 - i}],I2^[{i}]) <= e0*e2 (i={i})",
                e[2 - i] * e[i],
                e0 * e2,
            )
        )
    for i in range(3):
        verdicts.append(
            InequalityVerdict(
                "3",
                f"e(I1^[{2 - i}],I2^[{i}])^2 <= e0^{2 - i}*e2^{i} (i={i})",
                e[i] ** 2,
                e0 ** (2 - i) * e2**i,
            )
        )
    verdicts.append(
        InequalityVerdict(
            "4",
            "e(I1*I2)^(1/2) <= e0^(1/2) + e2^(1/2), decided as e1^2 <= e0*e2",
            e1 * e1,
            e0 * e2,
        )
    )
    return verdicts


def _form(
    config: ExceptionalConfig, d1: QDivisor, d2: QDivisor, weighted: bool
) -> MixedMultiplicityForm:
    if weighted:
        return weighted_mixed(config, [d1, d2])
    return mixed_form(config, [d1, d2])


def minkowski_report(
    config: ExceptionalConfig,
    d1: QDivisor,
    d2: QDivisor,
    weighted: bool = False,
) -> MinkowskiReport:
    """
    Check the Minkowski inequalities for {I(nD1)} and {I(nD2)} and classify equality.

    Args:
        config: Validated configuration
        d1: Nonzero effective divisor
        d2: Nonzero effective divisor
        weighted: Use the branch-weighted forms

    Returns:
        The report; on equality, a/b is e1/e0 in lowest terms and a*Delta1 = b*Delta2

    Raises:
        ZeroDivisor: If either divisor is zero
        InternalInvariantViolation: If an inequality or the certificate fails
    """
    for name, d in (("D1", d1), ("D2", d2)):
        if d.is_zero:
            raise ZeroDivisor(f"{name} is the zero divisor")

    form = _form(config, d1, d2, weighted)
    e0, e1, e2 = form.entry(0, 0), form.entry(0, 1), form.entry(1, 1)
    verdicts = tuple(minkowski_verdicts(e0, e1, e2))
    failed = [v.statement for v in verdicts if not v.holds]
    if failed:
        logger.error(f"Minkowski inequalities failed: {failed}")
        raise InternalInvariantViolation(f"Minkowski inequality failed: {failed[0]}")

    case: EqualityCase = Strict()
    if e1 * e1 == e0 * e2:
        ratio = e1 / e0
        a, b = ratio.numerator, ratio.denominator
        delta1, delta2 = form.deltas
        if delta1 * a != delta2 * b:
            logger.error(f"Equality certificate failed: {a}*{delta1} != {b}*{delta2}")
            raise InternalInvariantViolation("Minkowski equality without proportional Delta")
        case = Equality(a=a, b=b)

    logger.debug(f"Minkowski report e=({e0}, {e1}, {e2}) -> {case.kind}")
    return MinkowskiReport(
        e0=e0,
        e1=e1,
        e2=e2,
        verdicts=verdicts,
        equality_case=case,
        product_multiplicity=e0 + 2 * e1 + e2,
        weighted=weighted,
    )


def prime_distinctness(
    config: ExceptionalConfig, i: int, j: int, weighted: bool = False
) -> MinkowskiReport:
    """
    Minkowski report for two distinct prime curves, which must be strict.

    Equality would force the two valuations to coincide.

    Args:
        config: Validated configuration
        i: First curve index
        j: Second curve index
        weighted: Use the branch-weighted forms

    Returns:
        The (strict) Minkowski report of E_i, E_j
    """
    if i == j:
        raise SameIndex(f"Curve indices must differ, got {i} twice", (i,))
    for idx in (i, j):
        if not 0 <= idx < config.size:
            raise DimensionMismatch(f"Curve index {idx} outside 0..{config.size - 1}", (idx,))
    report = minkowski_report(
        config,
        QDivisor.prime(config.size, i),
        QDivisor.prime(config.size, j),
        weighted=weighted,
    )
    if not isinstance(report.equality_case, Strict):
        raise InternalInvariantViolation(
            f"Distinct curves {i} and {j} satisfy Minkowski equality", (i, j)
        )
    return report


def classify(
    config: ExceptionalConfig, d1: QDivisor, d2: QDivisor, weighted: bool = False
) -> EqualityCase:
    """Strict or Equality(a, b) for the pair (D1, D2)."""
    return minkowski_report(config, d1, d2, weighted=weighted).equality_case

