"""Directed hyperbolicity toolkit: distances, thin/slim constants, boundaries of digraph families."""

from ._dirhyp import (
    Digraph,
    acceptance,
    boundary,
    bound_profile,
    count_geodesics,
    delta,
    distances,
    families,
    is_zero_hyperbolic,
    realize,
    stability,
)

__all__ = [
    "Digraph",
    "acceptance",
    "boundary",
    "bound_profile",
    "count_geodesics",
    "delta",
    "distances",
    "families",
    "is_zero_hyperbolic",
    "realize",
    "stability",
]
