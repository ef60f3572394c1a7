"""Exact arithmetic linking bicentric quadrilaterals that have a rational
circumradius/inradius ratio to rational points on a family of elliptic
curves, with torsion classification, heights and sieve-based rank hunting.
"""

from .curves import INFINITY, Curve, CurvePoint, Point
from .family import (
    auxiliary_curve,
    dual_curve,
    family_curve,
    family_torsion_points,
    geometric_progression_points,
    has_full_two_torsion,
    isogeny_to_dual,
    parameter_from_auxiliary_point,
    product_torsion_parameter,
    subfamily,
    subfamily1_cleared,
    subfamily_parameter,
)
from .quad import (
    BicentricData,
    Quadrilateral,
    bicentric_data,
    n_ratio,
    point_to_quad,
    point_to_semiperimeter,
    quad_to_point,
    search_quads,
    semiperimeter_quartic,
    trapezoid,
)
from .torsion import (
    TorsionStructure,
    point_order,
    torsion_order_bound,
    torsion_subgroup,
    two_torsion_points,
)
from .analysis import (
    HeightResult,
    SieveRecord,
    canonical_height,
    is_probably_independent,
    mestre_nagao,
    mestre_nagao_sums,
    naive_height,
    point_search,
    regulator,
    sieve,
)

__version__ = "0.1.0"
