"""Canonical codes, isomorphism tests and the conjugacy/equivalence predicates."""
from __future__ import annotations

from enum import Enum
from typing import Sequence

from .graphs import (
    DistinguishingGraph,
    Graph,
    GraphError,
    VertexKind,
    components,
    find_cycle_edge,
    require,
    validate_distinguishing,
    validate_local_tree,
)
from .labeling import automorphisms_from_leaves, canonical_form

FORMAT_VERSION = 1

KIND_CODES = {
    VertexKind.REGION: 0,
    VertexKind.WHITE: 1,
    VertexKind.BLACK: 2,
    VertexKind.GRAY: 3,
    VertexKind.JUNCTION: 4,
}
SIGN_CODES = {None: 0, 1: 1, -1: 2}


class Relation(str, Enum):
    LOCAL_ISO = "local"
    CONJUGACY = "conjugacy"
    EQUIVALENCE = "equivalence"


# relation tag byte that follows the format version
_TAG_GRAPH = 0
_TAG_TREE = 1
_TAG_CONJUGACY = 2
_TAG_EQUIVALENCE = 3


class CanonicalCode(bytes):
    """Relabeling-invariant byte string; ``bytes`` ordering is the total order."""

    @property
    def version(self) -> int:
        return self[0]

    def __repr__(self) -> str:
        return f"CanonicalCode({self.hex()})"


def _u16(x: int) -> bytes:
    if not 0 <= x < 1 << 16:
        raise GraphError("graph too large for the canonical code format")
    return x.to_bytes(2, "big")


def _vertex_colors(g: Graph, with_signs: bool) -> list[int]:
    return [
        KIND_CODES[k] * 3 + (SIGN_CODES[g.signs.get(v)] if with_signs else 0)
        for v, k in g.kinds.items()
    ]


def _index_adjacency(g: Graph) -> list[list[int]]:
    index = {v: i for i, v in enumerate(g.kinds)}
    adj: list[list[int]] = [[] for _ in index]
    for u, v in g.edges:
        adj[index[u]].append(index[v])
        adj[index[v]].append(index[u])
    return adj


def _encode(tag: int, key: tuple) -> CanonicalCode:
    colors, edges = key
    out = bytearray([FORMAT_VERSION, tag])
    out += _u16(len(colors))
    out += bytes(colors)
    out += _u16(len(edges))
    for u, v in edges:
        out += _u16(u) + _u16(v)
    return CanonicalCode(bytes(out))


def canonical_labeling(g: Graph, with_signs: bool = True) -> tuple[CanonicalCode, list[int]]:
    """Canonical code under kind-preserving (and sign-preserving) isomorphism.

    Also returns the vertex ids in canonical position order.
    """
    verts = g.vertices
    key, leaves = canonical_form(_vertex_colors(g, with_signs), _index_adjacency(g))
    return _encode(_TAG_GRAPH, key), [verts[i] for i in leaves[0]]


def graph_code(g: Graph, with_signs: bool = True) -> CanonicalCode:
    return canonical_labeling(g, with_signs)[0]


def graph_automorphisms(g: Graph, with_signs: bool = False) -> list[dict[int, int]]:
    verts = g.vertices
    _, leaves = canonical_form(_vertex_colors(g, with_signs), _index_adjacency(g))
    return [{verts[i]: verts[p[i]] for i in range(len(verts))} for p in automorphisms_from_leaves(leaves)]


# ---------------------------------------------------------------------------
# Trees


def _tree_centers(verts: Sequence[int], adj: dict[int, list[int]]) -> list[int]:
    if len(verts) <= 2:
        return list(verts)
    deg = {v: len(adj[v]) for v in verts}
    leaves = [v for v in verts if deg[v] <= 1]
    remaining = len(verts)
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for u in adj[leaf]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
            deg[leaf] = 0
        leaves = nxt
    return sorted(leaves)


def _rooted_code(root: int, adj: dict[int, list[int]], labels: dict[int, int]) -> bytes:
    # iterative post-order; each subtree is "(" label child* ")"
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in adj[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    codes: dict[int, bytes] = {}
    for v in reversed(order):
        kids = sorted(codes.pop(u) for u in adj[v] if u != parent[v])
        codes[v] = b"(" + bytes([labels[v]]) + b"".join(kids) + b")"
    return codes[root]


def canonical_tree_code(t: Graph) -> CanonicalCode:
    """Center-rooted AHU encoding of a vertex-labeled tree (labels are kinds)."""
    verts = t.vertices
    if not verts or find_cycle_edge(verts, t.edges) is not None or len(components(verts, t.edges)) != 1:
        raise GraphError("canonical_tree_code needs a connected acyclic graph")
    adj = t.adjacency
    labels = {v: KIND_CODES[k] for v, k in t.kinds.items()}
    best = min(_rooted_code(c, adj, labels) for c in _tree_centers(verts, adj))
    return CanonicalCode(bytes([FORMAT_VERSION, _TAG_TREE]) + _u16(len(verts)) + best)


def are_locally_equivalent(t1: Graph, t2: Graph) -> bool:
    require(validate_local_tree(t1), "local tree")
    require(validate_local_tree(t2), "local tree")
    return canonical_tree_code(t1) == canonical_tree_code(t2)


# ---------------------------------------------------------------------------
# Distinguishing graphs


def automorphisms(g: DistinguishingGraph) -> list[dict[int, int]]:
    """All kind-preserving automorphisms (signs ignored), sorted by image tuple."""
    require(validate_distinguishing(g), "distinguishing graph")
    return graph_automorphisms(g, with_signs=False)


def canonical_code(g: DistinguishingGraph, relation: Relation | str) -> CanonicalCode:
    relation = Relation(relation)
    require(validate_distinguishing(g), "distinguishing graph")
    if relation is Relation.CONJUGACY:
        variants = [g]
        tag = _TAG_CONJUGACY
    elif relation is Relation.EQUIVALENCE:
        from .signs import swap_with_signs

        variants = [g, swap_with_signs(g)]
        tag = _TAG_EQUIVALENCE
    else:
        raise ValueError(f"canonical_code supports conjugacy and equivalence, not {relation.value}")
    best = min(
        canonical_form(_vertex_colors(h, True), _index_adjacency(h))[0]
        for v in variants
        for h in (v, v.negated())
    )
    return _encode(tag, best)


def are_conjugate(g1: DistinguishingGraph, g2: DistinguishingGraph) -> bool:
    return canonical_code(g1, Relation.CONJUGACY) == canonical_code(g2, Relation.CONJUGACY)


def are_equivalent(g1: DistinguishingGraph, g2: DistinguishingGraph) -> bool:
    return canonical_code(g1, Relation.EQUIVALENCE) == canonical_code(g2, Relation.EQUIVALENCE)


def related(g1: Graph, g2: Graph, relation: Relation | str) -> bool:
    """Dispatch used by the command line: local trees or distinguishing graphs."""
    relation = Relation(relation)
    if relation is Relation.LOCAL_ISO:
        return are_locally_equivalent(g1, g2)
    if relation is Relation.CONJUGACY:
        return are_conjugate(g1, g2)
    return are_equivalent(g1, g2)
