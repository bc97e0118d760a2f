"""Exact-arithmetic workbench for fusion rings with maximal-rank subrings."""

__version__ = "0.1.0"
