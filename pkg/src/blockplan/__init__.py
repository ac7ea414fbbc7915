"""Tabletop block rearrangement planning.

Backward, conflict-driven task search combined with globally optimal
mixed-integer quadratic placement optimization, plus forward tree-search
baselines, a closed-loop replanning simulator, and a benchmark harness.
"""

__version__ = "0.1.0"

SCHEMA_VERSION = 1
