"""Nilpotent-orbit combinatorics for the classical types B, C, D: partition
collapses, duality maps, the Springer correspondence via symbols, Lusztig
families, canonical-quotient markings and wavefront-set formulas."""

__version__ = "0.1.0"
