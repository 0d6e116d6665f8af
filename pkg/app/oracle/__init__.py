"""
Monomial lattice-counting oracle: valuation ideals, colengths and toric bridges.
"""

from .bridge import BridgeReport, bridge_check, ceiling_witness, ideal_certificates
from .filtration import (
    FiltrationTerm,
    OracleFiltrationSpec,
    TruncatedFiltration,
    filtration_ideal,
    subadditivity_violations,
    tau_sequence,
    truncate,
)
from .fitting import (
    LimitFit,
    PolynomialFit,
    colength_sequence,
    limit_fit,
    mixed_poly_oracle,
    sequence_csv,
)
from .ideals import (
    MonomialIdeal,
    MonomialValuation,
    colength,
    contains,
    ideal_sum,
    intersect,
    product,
    val_ideal,
)
from .toric import ToricConfig, toric_config

__all__ = [
    "MonomialValuation",
    "MonomialIdeal",
    "val_ideal",
    "intersect",
    "product",
    "ideal_sum",
    "contains",
    "colength",
    "FiltrationTerm",
    "OracleFiltrationSpec",
    "TruncatedFiltration",
    "filtration_ideal",
    "tau_sequence",
    "subadditivity_violations",
    "truncate",
    "LimitFit",
    "PolynomialFit",
    "limit_fit",
    "colength_sequence",
    "mixed_poly_oracle",
    "sequence_csv",
    "ToricConfig",
    "toric_config",
    "BridgeReport",
    "bridge_check",
    "ceiling_witness",
    "ideal_certificates",
]
