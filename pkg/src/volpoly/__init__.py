"""Exact tools for Lorentzian and volume polynomials.

Normalized-coefficient polynomial calculus, Lorentzian certification,
M-convex sets and polymatroid ranks, exact mixed volumes of rational
polytopes, checkers for projection-area conditions, and operator scanners.
"""

from .discrete import (
    MConvexSet,
    PolymatroidRank,
    PrimeFieldMatrix,
    SimpleGraph,
    bases_from_rank,
    basis_generating_poly,
    dual_mconvex,
    duality_vector,
    graphic_matroid,
    is_matroid,
    is_mconvex,
    is_polymatroid_rank,
    linear_matroid,
    matroid_status,
    rank_from_bases,
)
from .errors import AxiomError, CapError, DimensionError, VolpolyError
from .hull import BACKEND as HULL_BACKEND
from .lorentzian import (
    SymMatrix,
    bivariate_lorentzian,
    charpoly,
    coefficient_af_check,
    definition_sides,
    falsify_definition,
    inertia,
    is_lorentzian,
)
from .operators import (
    MonomialOperator,
    apply_operator,
    compose,
    interlacing_apply,
    kt_scan,
    rkt_scan,
    symbol,
)
from .poly import HomogeneousPoly, apply_diff, product
from .polytope import (
    BodyCollection,
    RationalPolytope,
    hull_volume,
    minkowski_sum,
    mixed_volume,
    project,
    scale,
    volume_polynomial,
)
from .realizability import (
    PairVector,
    one_positive_condition,
    pair_matrix,
    principal_4x4_condition,
    t2_plucker_condition,
    triangle_condition,
)
from .special import YoungDiagram, elementary_symmetric, fano_poly, kostka, normalized_schur, spanning_tree_poly

__version__ = "0.1.0"
