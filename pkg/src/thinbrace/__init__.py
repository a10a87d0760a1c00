"""Thinbrace: matching covered graphs, braces, thin edges and planar brace census."""

__version__ = "1.0.0"
