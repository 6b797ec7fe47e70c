"""Colorful graphs: edge-colored simple graphs with colors from GF(p)."""

from .apply import (
    Assignment,
    AssignmentMatrix,
    PlanePacking,
    build_assignment_matrix,
    build_projective_plane,
    find_assignments,
    monochromatic_clique_census,
    pad_to_square,
    triangle_census,
    verify_packing,
)
from .core import (
    CDigraph,
    CGraph,
    ColorPermutation,
    CVector,
    Relation,
    adjacency_matrix,
    adjacency_matrix_directed,
    classify_relative,
    degree,
    delete_edge,
    delete_vertex,
    from_matrix,
    from_vector,
    is_j_complete,
    is_k_bipartite,
    is_k_independent,
    k_complete_bipartite,
    monochromatic_component,
    pi_complement,
    scalar_mul,
    subgraph,
    to_vector,
    vector_add,
)
from .enumeration import (
    burnside_oracle,
    census,
    configuration_series,
    count_unlabeled,
    figure_series,
    pair_group_cycle_index,
)
from .errors import CGraphError
from .field import FieldElement, Modulus, make_modulus
from .iso import (
    CanonicalCode,
    VertexPermutation,
    apply_vertex_perm,
    canonical_code,
    cautomorphisms,
    cisomorphic,
    complement_commutes_check,
    permutation_matrix,
)
from .reconstruct import Deck, chypomorphic, conjecture_search, edge_deck, vertex_deck
from .structure import (
    KPath,
    components,
    find_k_cycle,
    find_k_path,
    is_connected,
    is_j_connected,
    max_colored_edges,
    odd_degree_path,
)
from .textio import format_cgraph, parse_cgraph

__version__ = "0.1.0"

__all__ = [
    "adjacency_matrix",
    "adjacency_matrix_directed",
    "apply_vertex_perm",
    "Assignment",
    "AssignmentMatrix",
    "build_assignment_matrix",
    "build_projective_plane",
    "burnside_oracle",
    "canonical_code",
    "CanonicalCode",
    "cautomorphisms",
    "CDigraph",
    "census",
    "CGraph",
    "CGraphError",
    "chypomorphic",
    "cisomorphic",
    "classify_relative",
    "ColorPermutation",
    "complement_commutes_check",
    "components",
    "configuration_series",
    "conjecture_search",
    "count_unlabeled",
    "CVector",
    "Deck",
    "degree",
    "delete_edge",
    "delete_vertex",
    "edge_deck",
    "FieldElement",
    "figure_series",
    "find_assignments",
    "find_k_cycle",
    "find_k_path",
    "format_cgraph",
    "from_matrix",
    "from_vector",
    "is_connected",
    "is_j_complete",
    "is_j_connected",
    "is_k_bipartite",
    "is_k_independent",
    "k_complete_bipartite",
    "KPath",
    "make_modulus",
    "max_colored_edges",
    "Modulus",
    "monochromatic_clique_census",
    "monochromatic_component",
    "odd_degree_path",
    "pad_to_square",
    "pair_group_cycle_index",
    "parse_cgraph",
    "permutation_matrix",
    "pi_complement",
    "PlanePacking",
    "Relation",
    "scalar_mul",
    "subgraph",
    "to_vector",
    "triangle_census",
    "vector_add",
    "verify_packing",
    "vertex_deck",
    "VertexPermutation",
]
