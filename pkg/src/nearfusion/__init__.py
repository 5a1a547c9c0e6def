"""Fusion rings, pre-metric groups and premodular data in exact arithmetic."""

__version__ = "0.1.0"
