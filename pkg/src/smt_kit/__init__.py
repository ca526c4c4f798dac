"""Exact combinatorics of extended diagrams, quadratic lattices, LS paths
and standard-monomial straightening for symmetric-pair data."""

__version__ = "0.1.0"
