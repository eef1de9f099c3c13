"""Planar harmonic mappings via the shear construction.

Thin Python layer over the C++ core: truncated-series arithmetic, the map
catalog, the shear and power-transform constructions, univalence criteria
with grid certification, alpha thresholds, and collision scans.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
