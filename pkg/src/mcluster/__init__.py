"""Geometric model of m-cluster categories of type A.

Diagonal quivers of polygons, m-th powers of translation quivers and their
component decompositions, and the triangulated calculus (Hom, Ext, cones,
AR triangles) of the cluster category, each checked against an
independent computation.
"""

from .decomposition import (ComponentReport, PredictedDecomposition, ShapeClass, classify_shape, decompose,
                            mirror_criterion, orbit_component_count, predict, u_cluster_match,
                            verify_decomposition)
from .errors import (MclusterError, NoCanonicalTriangle, NotInPower, TheoremViolation, VerificationFailure)
from .homological import (IntervalModule, MorphismClass, MorphismKind, ObjectRepr, Triangle, ar_triangle,
                          classify_morphism, cone, diagonal_to_object, ext1_nonzero, framed_set, hom_dim_c,
                          hom_dim_modkq, m_dilatation, object_to_diagonals)
from .iso import iso_translation_quivers, is_isomorphism
from .mesh import MeshAlgebra, arrow_to_pivot_moves, irr_dim, mesh_hom_dim
from .polygon import (Diagonal, Edge, PolygonConfig, all_diagonals, crosses, enumerate_m_diagonals,
                      is_m_diagonal, mirror, normalize, parity_class, rotate, rotate_tau_m)
from .tquiver import (QuotientSpec, TranslationQuiver, build_gamma_m, build_za_quotient, connected_components,
                      power, sectional_paths, tau_orbits)

__all__ = [
    "all_diagonals", "ar_triangle", "arrow_to_pivot_moves", "build_gamma_m", "build_za_quotient",
    "classify_morphism", "classify_shape", "ComponentReport", "cone", "connected_components", "crosses",
    "decompose", "Diagonal", "diagonal_to_object", "Edge", "enumerate_m_diagonals", "ext1_nonzero",
    "framed_set", "hom_dim_c", "hom_dim_modkq", "IntervalModule", "irr_dim", "is_isomorphism",
    "is_m_diagonal", "iso_translation_quivers", "m_dilatation", "MclusterError", "mesh_hom_dim",
    "MeshAlgebra", "mirror", "mirror_criterion", "MorphismClass", "MorphismKind", "NoCanonicalTriangle",
    "normalize", "NotInPower", "object_to_diagonals", "ObjectRepr", "orbit_component_count", "parity_class",
    "PolygonConfig", "power", "predict", "PredictedDecomposition", "QuotientSpec", "rotate", "rotate_tau_m",
    "sectional_paths", "ShapeClass", "tau_orbits", "TheoremViolation", "TranslationQuiver", "Triangle",
    "u_cluster_match", "VerificationFailure", "verify_decomposition",
]

__version__ = "0.1.0"
