"""Exact verification of distance spectra of co-centralizer graphs of finite non-abelian groups."""

__version__ = "0.1.0"
