"""Exact computation of the sixty Pascal lines of six points on a conic."""

__version__ = "0.1.0"
