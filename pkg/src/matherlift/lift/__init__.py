"""Lifting polar classes to intersection homology and the resulting
Chern-Mather and Chern-Schwartz-MacPherson classes."""

from .core import (
    LiftPath,
    LiftStep,
    LocalParam,
    ResolutionComponent,
    canonical_lift,
    certified_jacobian_multiplicity,
    eu_from_jacobian_multiplicity,
    jacobian_multiplicity,
    lift_codim1,
    push_to_ambient,
    random_projection,
    small_resolution_c1,
)

__all__ = [
    "LiftPath",
    "LiftStep",
    "LocalParam",
    "ResolutionComponent",
    "canonical_lift",
    "certified_jacobian_multiplicity",
    "eu_from_jacobian_multiplicity",
    "jacobian_multiplicity",
    "lift_codim1",
    "push_to_ambient",
    "random_projection",
    "small_resolution_c1",
]
