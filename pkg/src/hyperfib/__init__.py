"""Exact analysis of singular fibers of hyperelliptic fibrations y^2 = h(x, t)."""

__version__ = "0.1.0"
