"""Hierarchical context-based visual storytelling network and its pipeline."""

__version__ = "0.1.0"
