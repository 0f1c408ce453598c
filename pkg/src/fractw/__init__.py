"""Online fractional coloring game on partial t-trees, with exact bounds and a chi_f oracle."""

__version__ = "0.1.0"
