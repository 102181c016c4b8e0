"""Fusion products of MV cycles via Mirkovic-Vybornov slices in type A."""

__version__ = "0.1.0"
