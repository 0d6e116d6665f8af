"""
Pydantic models for command requests and JSON input documents.
"""

from pathlib import Path
from typing import List, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    StrictInt,
    StrictStr,
    field_validator,
    model_validator,
)

from app.config import settings
from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig
from app.oracle.filtration import OracleFiltrationSpec
from app.oracle.ideals import MonomialValuation
from app.utils.rationals import parse_rational

COMMANDS = (
    "validate",
    "decompose",
    "volume",
    "mixed",
    "minkowski",
    "rees",
    "gamma",
    "oracle-colength",
    "oracle-fit",
    "oracle-tau",
    "oracle-truncate",
    "toric-build",
    "bridge-check",
)

FORMATS = ("json", "markdown", "csv")

RationalValue = Union[StrictInt, StrictStr]


class InputDocument(BaseModel):
    """Base for input documents: unknown keys are schema errors."""

    model_config = ConfigDict(extra="forbid")


class ConfigDocument(InputDocument):
    """Exceptional configuration plus optional divisors on it."""

    curves: List[StrictStr] = Field(..., min_length=1, description="Curve labels")
    gram: List[List[StrictInt]] = Field(..., description="Intersection matrix")
    branches: Optional[List[List[StrictInt]]] = Field(
        default=None, description="Partition of curve indices into branches"
    )
    weights: Optional[List[StrictInt]] = Field(default=None, description="Branch weights")
    divisors: List[List[RationalValue]] = Field(
        default_factory=list, description="Divisor coefficients as ints or 'p/q' strings"
    )

    @field_validator("divisors")
    @classmethod
    def check_rationals(cls, divisors: List[List[RationalValue]]) -> List[List[RationalValue]]:
        for row in divisors:
            for value in row:
                parse_rational(value)
        return divisors

    @model_validator(mode="after")
    def check_shapes(self) -> "ConfigDocument":
        s = len(self.curves)
        if len(self.gram) != s or any(len(row) != s for row in self.gram):
            raise ValueError(f"gram must be {s}x{s} to match {s} curves")
        for k, row in enumerate(self.divisors):
            if len(row) != s:
                raise ValueError(f"divisor {k} has {len(row)} coefficients, expected {s}")
        return self

    def to_config(self) -> ExceptionalConfig:
        return ExceptionalConfig.build(
            self.gram, labels=self.curves, branches=self.branches, weights=self.weights
        )

    def to_divisors(self) -> List[QDivisor]:
        return [QDivisor.of(row) for row in self.divisors]


class ValuationModel(InputDocument):
    a: StrictInt
    b: StrictInt

    def to_valuation(self) -> MonomialValuation:
        return MonomialValuation(self.a, self.b)


class TermModel(ValuationModel):
    c: StrictInt = Field(..., ge=0, description="Coefficient of the term")


class SpecModel(InputDocument):
    terms: List[TermModel] = Field(..., min_length=1)

    def to_spec(self) -> OracleFiltrationSpec:
        return OracleFiltrationSpec.of((t.a, t.b, t.c) for t in self.terms)


class OracleDocument(SpecModel):
    """A filtration spec with the parameters of the oracle commands."""

    n: Optional[StrictInt] = Field(default=None, ge=0, description="Filtration index")
    target: Optional[ValuationModel] = Field(default=None, description="Target valuation")
    truncation: Optional[List[StrictInt]] = Field(
        default=None, description="Truncation degrees a >= 1"
    )

    @field_validator("truncation")
    @classmethod
    def check_truncation(cls, degrees: Optional[List[int]]) -> Optional[List[int]]:
        if degrees is not None and any(a < 1 for a in degrees):
            raise ValueError("truncation degrees must be positive")
        return degrees


class ToricDocument(InputDocument):
    targets: List[ValuationModel] = Field(..., min_length=1)


class BridgeDocument(InputDocument):
    specs: List[SpecModel] = Field(..., min_length=1)


class RunRequest(BaseModel):
    """Request model for one CLI invocation."""

    command: str = Field(..., description="Command name")
    input_path: Optional[Path] = Field(default=None, description="JSON input document")
    depth: int = Field(
        default_factory=lambda: settings.certificate_depth,
        ge=1,
        description="Certificate depth N",
    )
    window: int = Field(
        default_factory=lambda: settings.fit_window, ge=1, description="Fit window M"
    )
    format: str = Field(
        default_factory=lambda: settings.output_format, description="Output format"
    )
    weighted: bool = Field(default=False, description="Use branch-weighted forms")
