"""Polar varieties, Chern-Mather classes and their lift to intersection
homology, computed exactly over the rationals."""

__version__ = "0.1.0"
