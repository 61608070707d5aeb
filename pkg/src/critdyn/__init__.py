"""Exact arithmetic dynamics of quadratic rational maps with a rational critical 3-cycle."""

__version__ = "0.1.0"
