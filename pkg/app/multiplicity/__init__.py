"""
Volumes and mixed multiplicities of divisorial filtrations.
"""

from .forms import (
    MixedMultiplicityForm,
    MultiplicityPolynomial,
    degree_two_exponents,
    mixed_form,
    mixed_polynomial,
    polynomial_from_form,
    product_multiplicity,
    volume,
)
from .weighted import weighted_mixed, weighted_volume

__all__ = [
    "MixedMultiplicityForm",
    "MultiplicityPolynomial",
    "degree_two_exponents",
    "volume",
    "mixed_form",
    "mixed_polynomial",
    "polynomial_from_form",
    "product_multiplicity",
    "weighted_mixed",
    "weighted_volume",
]
