"""
Exceptional configurations: weighted dual graphs of a resolution.

An ``ExceptionalConfig`` holds the exact intersection matrix of the exceptional
curves together with the branch partition (one group per maximal ideal of the
normalization) and the residue-degree weight of every branch.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from operator import index
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.linalg import leading_principal_minors
from app.errors import (
    AsymmetricMatrix,
    ConfigError,
    CrossBranchIntersection,
    DimensionMismatch,
    DisconnectedBranch,
    InvalidBranchPartition,
    NegativeOffDiagonal,
    NonIntegerEntry,
    NotNegativeDefinite,
    PositiveDiagonal,
    WeightMismatch,
)
from app.utils.logger import get_logger

logger = get_logger(__name__)


def _integer(value, what: str) -> int:
    if isinstance(value, bool):
        raise NonIntegerEntry(f"{what} must be an integer, got {value!r}")
    try:
        return index(value)
    except TypeError:
        raise NonIntegerEntry(f"{what} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class ExceptionalConfig:
    """Weighted dual graph with an exact integer intersection matrix."""

    curve_labels: Tuple[str, ...]
    gram: Tuple[Tuple[int, ...], ...]
    branches: Tuple[Tuple[int, ...], ...]
    branch_weights: Tuple[int, ...]
    _branch_of: Dict[int, int] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        s = len(self.curve_labels)
        if len(self.gram) != s or any(len(row) != s for row in self.gram):
            raise DimensionMismatch(
                f"gram must be {s}x{s} to match {s} curve labels"
            )
        for t, group in enumerate(self.branches):
            for i in group:
                self._branch_of.setdefault(i, t)

    @classmethod
    def build(
        cls,
        gram: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        branches: Optional[Sequence[Sequence[int]]] = None,
        weights: Optional[Sequence[int]] = None,
    ) -> "ExceptionalConfig":
        """
        Build a config from plain lists.

        Args:
            gram: Intersection matrix, entry (i, j) = (E_i . E_j)
            labels: Curve identifiers (defaults to E1..Es)
            branches: Partition of curve indices (defaults to one branch)
            weights: Residue-degree weight per branch (defaults to all 1)

        Returns:
            An unvalidated config; call :func:`validate_config` before use

        Raises:
            NonIntegerEntry: If an entry, index or weight is not an integer
        """
        s = len(gram)
        if labels is None:
            labels = [f"E{i + 1}" for i in range(s)]
        if branches is None:
            branches = [list(range(s))]
        if weights is None:
            weights = [1] * len(branches)
        return cls(
            curve_labels=tuple(str(x) for x in labels),
            gram=tuple(tuple(_integer(x, "gram entry") for x in row) for row in gram),
            branches=tuple(tuple(_integer(i, "curve index") for i in group) for group in branches),
            branch_weights=tuple(_integer(w, "branch weight") for w in weights),
        )

    @property
    def size(self) -> int:
        """Number of exceptional curves."""
        return len(self.curve_labels)

    def branch_of(self, index: int) -> int:
        """Branch number containing curve ``index``."""
        return self._branch_of[index]

    def restrict_to_branch(self, branch: int) -> Tuple["ExceptionalConfig", Tuple[int, ...]]:
        """
        Return the intersection block of one branch as its own config.

        Args:
            branch: Branch number

        Returns:
            Tuple of (single-branch config of weight 1, original curve indices)
        """
        indices = self.branches[branch]
        sub = ExceptionalConfig.build(
            gram=[[self.gram[i][j] for j in indices] for i in indices],
            labels=[self.curve_labels[i] for i in indices],
        )
        return sub, indices


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_config`."""

    violations: Tuple[ConfigError, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def raise_for_violations(self) -> None:
        """Raise the first violation, if any."""
        if self.violations:
            first = self.violations[0]
            raise type(first)(first.message, first.indices)

    def to_dict(self) -> Dict:
        return {
            "valid": self.valid,
            "violations": [
                {"code": v.code, "message": v.message, "indices": list(v.indices)}
                for v in self.violations
            ],
        }


def _partition_violations(config: ExceptionalConfig) -> List[ConfigError]:
    s = config.size
    violations: List[ConfigError] = []
    seen: List[int] = [i for group in config.branches for i in group]
    if any(len(group) == 0 for group in config.branches):
        violations.append(InvalidBranchPartition("Every branch must be non-empty"))
    if sorted(seen) != list(range(s)):
        stray = sorted(set(i for i in seen if not 0 <= i < s) | set(
            i for i in range(s) if seen.count(i) != 1
        ))
        violations.append(
            InvalidBranchPartition(
                "Branches must partition the curve indices exactly once", stray
            )
        )
    if len(config.branch_weights) != len(config.branches):
        violations.append(
            WeightMismatch(
                f"{len(config.branch_weights)} weights for "
                f"{len(config.branches)} branches"
            )
        )
    bad = [t for t, w in enumerate(config.branch_weights) if w <= 0]
    if bad:
        violations.append(WeightMismatch("Branch weights must be positive", bad))
    return violations


def _branch_connected(config: ExceptionalConfig, group: Sequence[int]) -> bool:
    members = set(group)
    start = group[0]
    reached = {start}
    frontier = [start]
    while frontier:
        i = frontier.pop()
        for j in members:
            if j not in reached and config.gram[i][j] > 0:
                reached.add(j)
                frontier.append(j)
    return reached == members


@lru_cache(maxsize=4096)
def validate_config(config: ExceptionalConfig) -> ValidationReport:
    """
    Check the standing hypotheses on an exceptional configuration.

    Checks symmetry, the sign pattern, branch separation and connectivity, and
    negative definiteness through the signs of the leading principal minors.

    Args:
        config: Configuration to check

    Returns:
        Report listing every violated invariant (empty when valid)
    """
    s = config.size
    g = config.gram
    violations: List[ConfigError] = []

    partition = _partition_violations(config)
    violations.extend(partition)
    partition_ok = not any(isinstance(v, InvalidBranchPartition) for v in partition)

    for i in range(s):
        for j in range(i + 1, s):
            if g[i][j] != g[j][i]:
                violations.append(
                    AsymmetricMatrix(f"gram[{i}][{j}] != gram[{j}][{i}]", (i, j))
                )

    for i in range(s):
        if g[i][i] >= 0:
            violations.append(
                PositiveDiagonal(f"Self-intersection of curve {i} is {g[i][i]}", (i,))
            )

    for i in range(s):
        for j in range(i + 1, s):
            if g[i][j] < 0 or g[j][i] < 0:
                violations.append(
                    NegativeOffDiagonal(
                        f"Curves {i} and {j} meet negatively", (i, j)
                    )
                )

    if partition_ok:
        for i in range(s):
            for j in range(i + 1, s):
                if config.branch_of(i) != config.branch_of(j) and (
                    g[i][j] != 0 or g[j][i] != 0
                ):
                    violations.append(
                        CrossBranchIntersection(
                            f"Curves {i} and {j} lie on different branches but meet",
                            (i, j),
                        )
                    )
        for t, group in enumerate(config.branches):
            if group and not _branch_connected(config, group):
                violations.append(
                    DisconnectedBranch(f"Branch {t} is not connected", group)
                )

    for k, minor in enumerate(leading_principal_minors(g), start=1):
        if minor == 0 or (minor > 0) != (k % 2 == 0):
            violations.append(
                NotNegativeDefinite(
                    f"Leading principal minor of order {k} is {minor}",
                    tuple(range(k)),
                )
            )
            break

    report = ValidationReport(violations=tuple(violations))
    if not report.valid:
        logger.warning(
            f"Config with {s} curves failed validation: "
            f"{', '.join(v.code for v in report.violations)}"
        )
    return report


def require_valid(config: ExceptionalConfig) -> ExceptionalConfig:
    """Return ``config`` unchanged, raising its first violation if invalid."""
    validate_config(config).raise_for_violations()
    return config
