"""Combinatorial patchworking of real algebraic hypersurfaces.

Build T-curves and T-surfaces from lattice triangulations and sign
distributions, decide convexity (regularity) of subdivisions with exact
rational proof objects, compute the topology of the glued hypersurface,
and audit it against the classical topological restrictions.
"""

from .construction import (
    ModelComplex,
    PatchworkComplex,
    SignDistribution,
    SignedOrthantComplex,
    build_complex,
    extend_signs,
    extract_hypersurface,
    moment_render,
    projectivize,
)
from .invariants import (
    betti_total_complex,
    chi_complex,
    complex_invariants,
    harnack_bound,
    hodge_numbers,
    signature_complex,
)
from .lattice import (
    InvalidArgument,
    LatticePolytope,
    LatticeSubdivision,
    Triangulation,
    is_maximal,
    is_primitive,
    standard_simplex,
    validate_subdivision,
)
from .regularity import (
    LiftingWitness,
    NonRegularityCertificate,
    StarMoveTrace,
    check_regularity,
    convexify_star_moves,
    maximal_convex_refinement,
    verify_certificate,
    verify_witness,
)
from .restrictions import RestrictionReport, check_all
from .search import SearchResult, SearchTask, run
from .topology import TopologyReport, analyze, analyze_signs, mod2_degree

__version__ = "0.1.0"

__all__ = [
    "ModelComplex",
    "PatchworkComplex",
    "SignDistribution",
    "SignedOrthantComplex",
    "build_complex",
    "extend_signs",
    "extract_hypersurface",
    "moment_render",
    "projectivize",
    "betti_total_complex",
    "chi_complex",
    "complex_invariants",
    "harnack_bound",
    "hodge_numbers",
    "signature_complex",
    "InvalidArgument",
    "LatticePolytope",
    "LatticeSubdivision",
    "Triangulation",
    "is_maximal",
    "is_primitive",
    "standard_simplex",
    "validate_subdivision",
    "LiftingWitness",
    "NonRegularityCertificate",
    "StarMoveTrace",
    "check_regularity",
    "convexify_star_moves",
    "maximal_convex_refinement",
    "verify_certificate",
    "verify_witness",
    "RestrictionReport",
    "check_all",
    "SearchResult",
    "SearchTask",
    "run",
    "TopologyReport",
    "analyze",
    "analyze_signs",
    "mod2_degree",
]
