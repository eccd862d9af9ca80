"""Exact combinatorics of the (2,2,2,2) tubular cluster algebra.

Modules: :mod:`slopes` (extended rationals, unfolding), :mod:`lattice`
(Euler form, Coxeter map), :mod:`roots` (real Schur roots, compatibility),
:mod:`arcs` (arcs on the four-punctured sphere), :mod:`quiver` (matrix
mutation and isomorphism), :mod:`exchange` (clusters and flips).
"""
from .slopes import Slope, parse_slope
from .roots import QuatUnit, RootIndex, parse_root_index, parse_unit

__version__ = "0.1.0"
__all__ = ["Slope", "parse_slope", "QuatUnit", "RootIndex", "parse_root_index", "parse_unit"]
