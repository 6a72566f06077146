"""Exact lattice geometry of rational polygons.

Count lattice points in dilates exactly, reconstruct the degree-2
count quasipolynomial, certify pseudointegrality, and generate the
polygon families realizing extreme interior/boundary profiles.
"""

__version__ = "0.1.0"

from .counting import CountReport, count_boundary, count_interior, count_total, count_report
from .ehrhart import (
    PipCertificate,
    QuasiPolynomial,
    check_reciprocity,
    is_pseudointegral,
    reconstruct_quasipolynomial,
)
from .exact import AffineMap, IntMat2, Vec2, det2, primitive, rat_ceil, rat_floor
from .polygon import Edge, RationalPolygon, hull, triangle_invariant
from .vieta import (
    FamilyState,
    VietaSolution,
    enumerate_reduced,
    family,
    is_solution,
    is_vieta_reduced,
    jump_forest,
    verify_general_bound,
    vieta_jump,
    vieta_reduce,
)

__all__ = [
    "AffineMap",
    "CountReport",
    "Edge",
    "FamilyState",
    "IntMat2",
    "PipCertificate",
    "QuasiPolynomial",
    "RationalPolygon",
    "Vec2",
    "VietaSolution",
    "check_reciprocity",
    "count_boundary",
    "count_interior",
    "count_report",
    "count_total",
    "det2",
    "enumerate_reduced",
    "family",
    "hull",
    "is_pseudointegral",
    "is_solution",
    "is_vieta_reduced",
    "jump_forest",
    "primitive",
    "rat_ceil",
    "rat_floor",
    "reconstruct_quasipolynomial",
    "triangle_invariant",
    "verify_general_bound",
    "vieta_jump",
    "vieta_reduce",
]
