"""Chord diagrams, weight systems, cabling lifts, share mutation and a HOMFLY skein engine."""

__version__ = "0.1.0"
