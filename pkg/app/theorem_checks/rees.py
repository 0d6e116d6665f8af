"""
Rees theorem for divisorial filtrations in dimension 2.

If D1 <= D2 and the filtrations {I(nD1)}, {I(nD2)} have the same multiplicity,
then Delta1 = Delta2, hence I(nD1) = I(ceil(n Delta1)) = I(ceil(n Delta2)) = I(nD2)
for every n.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig
from app.errors import DimensionMismatch, InternalInvariantViolation, NotDominated
from app.multiplicity.weighted import weighted_mixed
from app.multiplicity.forms import mixed_form
from app.utils.logger import get_logger
from app.utils.rationals import format_rational
from app.zariski.decomposition import ceil_scale, decompose

logger = get_logger(__name__)


@dataclass(frozen=True)
class ReesReport:
    vol1: Fraction
    vol2: Fraction
    delta1: QDivisor
    delta2: QDivisor
    certificates: Tuple[Tuple[QDivisor, QDivisor], ...]
    weighted: bool = False

    @property
    def volumes_equal(self) -> bool:
        return self.vol1 == self.vol2

    @property
    def delta_equal(self) -> bool:
        return self.delta1 == self.delta2

    @property
    def certificates_agree(self) -> bool:
        return all(c1 == c2 for c1, c2 in self.certificates)

    def to_dict(self) -> dict:
        return {
            "vol1": format_rational(self.vol1),
            "vol2": format_rational(self.vol2),
            "volumes_equal": self.volumes_equal,
            "delta1": self.delta1.to_strings(),
            "delta2": self.delta2.to_strings(),
            "delta_equal": self.delta_equal,
            "certificates_agree": self.certificates_agree,
            "certificates": [
                {"n": n, "ceil1": c1.to_strings(), "ceil2": c2.to_strings()}
                for n, (c1, c2) in enumerate(self.certificates, start=1)
            ],
            "weighted": self.weighted,
        }


def rees_check(
    config: ExceptionalConfig,
    d1: QDivisor,
    d2: QDivisor,
    depth: int = 50,
    weighted: bool = False,
) -> ReesReport:
    """
    Compare the filtrations of D1 <= D2 through volumes and anti-nef parts.

    Args:
        config: Validated configuration
        d1: Effective divisor
        d2: Effective divisor dominating ``d1``
        depth: Number N of certificates ceil(n Delta1), ceil(n Delta2), n = 1..N
        weighted: Use the branch-weighted volumes

    Returns:
        The report

    Raises:
        NotDominated: If D1 <= D2 fails
        InternalInvariantViolation: If monotonicity or rigidity fails
    """
    if len(d1) != len(d2):
        raise DimensionMismatch("D1 and D2 have different lengths")
    if not d1 <= d2:
        offending = [i for i, (a, b) in enumerate(zip(d1, d2)) if a > b]
        raise NotDominated("D1 is not dominated by D2", offending)

    z1, z2 = decompose(config, d1), decompose(config, d2)
    delta1, delta2 = z1.Delta, z2.Delta
    form = weighted_mixed(config, [d1, d2]) if weighted else mixed_form(config, [d1, d2])
    vol1, vol2 = form.entry(0, 0), form.entry(1, 1)
    certificates = tuple(
        (ceil_scale(z1, n), ceil_scale(z2, n)) for n in range(1, depth + 1)
    )
    report = ReesReport(
        vol1=vol1,
        vol2=vol2,
        delta1=delta1,
        delta2=delta2,
        certificates=certificates,
        weighted=weighted,
    )

    if vol1 > vol2:
        raise InternalInvariantViolation(f"Vol(D1) = {vol1} exceeds Vol(D2) = {vol2}")
    if report.volumes_equal != report.delta_equal:
        logger.error(f"Volume rigidity failed: {vol1} vs {vol2}, {delta1} vs {delta2}")
        raise InternalInvariantViolation("Equal volumes without equal anti-nef parts")
    if report.delta_equal and not report.certificates_agree:
        raise InternalInvariantViolation("Equal anti-nef parts with different roundings")

    logger.debug(f"Rees check: vol {vol1} vs {vol2}, equal={report.volumes_equal}")
    return report
