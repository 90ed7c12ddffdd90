"""Exact rational geometry of centred polytopes and the ordered spaces built from them."""
from .linalg import DimensionError, Vector, parse_vector, to_rational
from .lp import LpOutcome, LpProblem, LpStatus, lp_solve
from .polytope import Polytope, contains, cross_polytope, cube, extreme_points, simplex
from .norms import NormOracle, gauge, is_strictly_convex, satisfies_property_S, supporting_functionals
from .centre import CentreResult, find_centre, verify_centre
from .adjunction import AdjoinedElement, AdjoinedSpace
from .base_normed import BaseNormedSpace
from .order_unit import AffineFunction, OrderUnitSpace, State

__all__ = [
    "DimensionError", "Vector", "parse_vector", "to_rational",
    "LpOutcome", "LpProblem", "LpStatus", "lp_solve",
    "Polytope", "contains", "cross_polytope", "cube", "extreme_points", "simplex",
    "NormOracle", "gauge", "is_strictly_convex", "satisfies_property_S", "supporting_functionals",
    "CentreResult", "find_centre", "verify_centre",
    "AdjoinedElement", "AdjoinedSpace", "BaseNormedSpace",
    "AffineFunction", "OrderUnitSpace", "State",
]
