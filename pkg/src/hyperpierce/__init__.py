"""Exact Gale duality, Radon pair search and hyperplane transversal certificates."""
from .bounds import DeltaBounds, delta_bounds, required_dimension
from .duality import NotSeparating, hyperplane_from_radon, radon_from_hyperplane
from .equipartition import (EquipartitionCertificate, MassInstance, equipartition_search, ham_sandwich,
                            moment_curve_instance, orthant_counts)
from .exact import Matrix, rref_nullspace
from .gale import LinearHyperplane, PointConfig, SignPattern, center_and_lift, gale_transform, inverse_gale
from .kneser import (SetFamily, chromatic_number, majority_family, nonface_complex, r_pairwise_disjoint_witness,
                     union_family, verify_coloring)
from .lp import LPProblem, lp_feasible
from .radon import (RadonPair, RadonTuple, SearchExhausted, enumerate_minimal_radon_pairs,
                    find_constrained_radon_tuple, find_minimal_radon_pair, hulls_intersect, minimalize)
from .transversal import (AffineHyperplane, Polytope, TransversalCertificate, affine_k_transversal,
                          build_witness_set, dolnikov_hyperplane, pierces_verify)

__version__ = "0.1.0"

__all__ = [
    "DeltaBounds", "delta_bounds", "required_dimension",
    "NotSeparating", "hyperplane_from_radon", "radon_from_hyperplane",
    "EquipartitionCertificate", "MassInstance", "equipartition_search", "ham_sandwich",
    "moment_curve_instance", "orthant_counts",
    "Matrix", "rref_nullspace",
    "LinearHyperplane", "PointConfig", "SignPattern", "center_and_lift", "gale_transform", "inverse_gale",
    "SetFamily", "chromatic_number", "majority_family", "nonface_complex", "r_pairwise_disjoint_witness",
    "union_family", "verify_coloring",
    "LPProblem", "lp_feasible",
    "RadonPair", "RadonTuple", "SearchExhausted", "enumerate_minimal_radon_pairs",
    "find_constrained_radon_tuple", "find_minimal_radon_pair", "hulls_intersect", "minimalize",
    "AffineHyperplane", "Polytope", "TransversalCertificate", "affine_k_transversal",
    "build_witness_set", "dolnikov_hyperplane", "pierces_verify",
]
