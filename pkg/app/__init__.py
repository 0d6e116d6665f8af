"""
ZMM - Zariski decompositions and Mixed Multiplicities of divisorial filtrations
on two-dimensional resolutions.
"""

__version__ = "1.0.0"
