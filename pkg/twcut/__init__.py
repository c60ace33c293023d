"""
twcut - treewidth reduction for small separators
Constrained cut, bipartization, contraction and list (H,C,<=K)-coloring
solvers built on covering all small minimal s-t separators by a set of
bounded-treewidth torso, each checked against brute-force oracles.

Version: 1.0.0
"""

__version__ = "1.0.0"
__author__ = "twcut developers"
