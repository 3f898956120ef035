"""Exact checks of torsion-cycle statements on Fermat varieties."""

__version__ = "0.1.0"
