"""Majorana fermion under linear scalar confinement in 1+1 dimensions.

Exact bound states (``majconfine.analytic``), the gamma-matrix algebra
(``majconfine.algebra``), finite-difference and shooting recomputations
(``majconfine.numeric``), a cross-validation harness (``majconfine.validate``)
and a command-line front end (``majconfine.cli``).
"""

__version__ = "0.1.0"

from .core import Grid, PotentialParams, SpinorField

__all__ = ["Grid", "PotentialParams", "SpinorField", "__version__"]
