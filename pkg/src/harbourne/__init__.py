"""
Harbourne - exact H-indices, cover invariants and negativity inequalities
for curve arrangements
"""

__version__ = "0.1.0"
