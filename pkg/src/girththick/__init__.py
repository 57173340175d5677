"""Planar decompositions of K_{n,n,n} and K_10 with girth at least four."""

from .construct import (
    construct,
    construct_even,
    construct_odd,
    construct_special,
    even_target_map,
    k10_decomposition,
    wrap_index,
)
from .graph import (
    Complete,
    CompleteTripartite,
    ConstructionTrace,
    Decomposition,
    Explicit,
    Part,
    PartiteVertex,
    SimpleGraph,
    edge,
    edge_union_multiset,
    make_complete,
    make_complete_tripartite,
)
from .metrics import (
    girth,
    girth_at_least,
    lower_bound_theta4_knnn,
    max_planar_edges,
    theta4_knnn,
)
from .planarity import PlanarityResult, is_planar, validate_embedding
from .verify import VerificationReport, exact_girth_thickness_small, verify_decomposition

__version__ = "0.1.0"

__all__ = [
    "Complete",
    "CompleteTripartite",
    "ConstructionTrace",
    "Decomposition",
    "Explicit",
    "Part",
    "PartiteVertex",
    "PlanarityResult",
    "SimpleGraph",
    "VerificationReport",
    "construct",
    "construct_even",
    "construct_odd",
    "construct_special",
    "edge",
    "edge_union_multiset",
    "even_target_map",
    "exact_girth_thickness_small",
    "girth",
    "girth_at_least",
    "is_planar",
    "k10_decomposition",
    "lower_bound_theta4_knnn",
    "make_complete",
    "make_complete_tripartite",
    "max_planar_edges",
    "theta4_knnn",
    "validate_embedding",
    "verify_decomposition",
    "wrap_index",
]
