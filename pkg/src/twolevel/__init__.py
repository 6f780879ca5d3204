"""Exact computations on 2-level polytopes and their vertex/facet trade-off."""

__version__ = "0.1.0"
