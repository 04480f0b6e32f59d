"""Projection profiles, run-histograms and entropy features computed
directly from run-length compressed bitonal document images."""

__version__ = "0.1.0"
