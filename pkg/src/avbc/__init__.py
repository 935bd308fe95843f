"""Capacity-region bounds and coding simulation for state-dependent broadcast channels."""

__version__ = "0.1.0"
