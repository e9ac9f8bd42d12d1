"""Exact generalized weights, profiles and Wei-type duality checks.

Subsets of a ground set ``[1, m]`` are bitmasks throughout: element ``i``
is bit ``i - 1``.
"""

__version__ = "0.1.0"
