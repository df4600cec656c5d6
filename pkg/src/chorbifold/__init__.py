"""Certified computations for the complex hyperbolic polygon group G(6,3)."""

__version__ = "0.1.0"
