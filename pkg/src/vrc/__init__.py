"""Racks, quandles and their virtual structures, classified up to isomorphism."""

__version__ = "0.1.0"
