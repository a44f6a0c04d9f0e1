"""Combinatorial classification of functions with three critical points on closed 3-manifolds."""
from .canon import (
    CanonicalCode,
    Relation,
    are_conjugate,
    are_equivalent,
    are_locally_equivalent,
    automorphisms,
    canonical_code,
    canonical_tree_code,
)
from .enumeration import (
    PairCountMatrix,
    SignMode,
    count_classes,
    enumerate_functions,
    enumerate_gluings,
    enumerate_point_graphs,
    pair_count_matrix,
    permutation_encoding,
)
from .formats import dumps, load, loads, to_dot
from .graphs import (
    CircleArrangement,
    DistinguishingGraph,
    GluingMap,
    GraphError,
    InvalidGraphError,
    LocalTree,
    PointGraph,
    Sign,
    ValidationReport,
    VertexKind,
    glue,
    split,
    subdivide,
    tree_from_arrangement,
    validate_distinguishing,
    validate_local_tree,
    validate_point_graph,
)
from .signs import product_rule_holds, propagate_signs, sign_orbits, swap_with_signs

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
