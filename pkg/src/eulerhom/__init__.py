"""Exact computations for mod-2 Euler homology and its equivariant version."""

__version__ = "0.1.0"
