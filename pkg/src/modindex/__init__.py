"""Modularity metrics for Java source trees.

Parses Java sources without compiling them, computes per-class metrics
(NCLOC, method count, LCOM4 cohesion, cyclomatic complexity), normalizes
them into class and package quality values, builds the package dependency
matrix, and combines everything into a single system-level modularity
index that can be tracked across project versions.
"""

__version__ = "0.1.0"

TOOL_NAME = "modindex"
