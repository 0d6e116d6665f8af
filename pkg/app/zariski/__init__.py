"""
Zariski decompositions: anti-nef parts and their integral roundings.
"""

from .brute_force import brute_force_decompose
from .decomposition import ZariskiDecomposition, anti_nef_parts, ceil_scale, decompose

__all__ = [
    "ZariskiDecomposition",
    "decompose",
    "brute_force_decompose",
    "ceil_scale",
    "anti_nef_parts",
]
