"""Normalized characters of symmetric groups as signed sums of bipartite coloring counts."""

__version__ = "0.1.0"
