"""Exact Seidel-matrix maximality, switching classes and root lattices."""

__version__ = "0.1.0"
