"""Exhaustive generation of point graphs and distinguishing graphs.

Classes of distinguishing graphs built from an ordered pair of point-graph
types (A white-black, B white-gray) correspond to orbits of admissible
gluings under Aut(A) x Aut(B): any color-preserving isomorphism between two
glued graphs restricts to automorphisms of A and B. Different ordered type
pairs never give isomorphic graphs, since deleting gray (black) vertices
recovers A (B). The hot loops over raw gluings live in ``_kernels``.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .canon import CanonicalCode, Relation, canonical_code, canonical_labeling, canonical_tree_code, graph_automorphisms
from .graphs import (
    DistinguishingGraph,
    GluingError,
    GluingMap,
    GraphError,
    PointGraph,
    VertexKind,
    glue,
    require,
    split,
    validate_distinguishing,
    validate_point_graph,
)
from .signs import sign_orbits

# Aut(A) x Aut(B) larger than this is handled by canonical codes instead of orbit keys
ORBIT_GROUP_LIMIT = 50_000


class SignMode(str, Enum):
    ORIENTED = "oriented"
    NONORIENTED = "nonoriented"
    ALL = "all"


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise GraphError(f"complexity n must be a positive integer, got {n!r}")


# ---------------------------------------------------------------------------
# Point graphs


def _grow_colored_trees(n: int) -> list[PointGraph]:
    """Bicolored trees with n white and n black vertices, one per colored isomorphism class."""
    K = VertexKind
    level = {canonical_tree_code(t): t for t in [PointGraph({0: K.WHITE}, ())]}
    for size in range(2, 2 * n + 1):
        nxt: dict[CanonicalCode, PointGraph] = {}
        for t in level.values():
            whites = len(t.vertices_of(K.WHITE))
            blacks = len(t.kinds) - whites
            for v, k in t.kinds.items():
                leaf_kind = K.BLACK if k is K.WHITE else K.WHITE
                if (leaf_kind is K.WHITE and whites == n) or (leaf_kind is K.BLACK and blacks == n):
                    continue
                kinds = dict(t.kinds)
                kinds[size - 1] = leaf_kind
                grown = PointGraph(kinds, t.edges + ((v, size - 1),))
                nxt.setdefault(canonical_tree_code(grown), grown)
        level = nxt
    return [t for t in level.values() if t.n == n]


@lru_cache(maxsize=None)
def _point_graphs(n: int) -> tuple[PointGraph, ...]:
    out = []
    for t in _grow_colored_trees(n):
        _, order = canonical_labeling(t)
        out.append((canonical_tree_code(t), t.relabel({v: i for i, v in enumerate(order)})))
    out.sort(key=lambda pair: pair[0])
    return tuple(g for _, g in out)


def enumerate_point_graphs(n: int) -> list[PointGraph]:
    """White-black point graphs of complexity n, one per colored isomorphism class, sorted by code."""
    _check_n(n)
    return list(_point_graphs(int(n)))


def as_gray(g: PointGraph) -> PointGraph:
    return PointGraph({v: VertexKind.GRAY if k is VertexKind.BLACK else k for v, k in g.kinds.items()}, g.edges)


def point_type_index(g: PointGraph) -> int:
    """Position of ``g`` (either color scheme) in ``enumerate_point_graphs(g.n)``."""
    require(validate_point_graph(g), "point graph")
    wb = PointGraph({v: VertexKind.BLACK if k is VertexKind.GRAY else k for v, k in g.kinds.items()}, g.edges)
    code = canonical_tree_code(wb)
    for i, t in enumerate(_point_graphs(g.n)):
        if canonical_tree_code(t) == code:
            return i
    raise AssertionError("point graph missing from enumeration")


@dataclass(frozen=True)
class _PointType:
    graph: PointGraph
    edges: tuple[tuple[int, int], ...]  # (white, other) in edge order
    whites: tuple[int, ...]
    white_edges: tuple[tuple[int, ...], ...]  # edge indices at each white, in ``whites`` order
    other_index: tuple[int, ...]  # per edge: index of the colored endpoint among non-white vertices
    edge_auts: np.ndarray  # (|Aut|, m) edge permutations

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(len(e) for e in self.white_edges))


@lru_cache(maxsize=None)
def _point_types(n: int) -> tuple[_PointType, ...]:
    out = []
    for g in _point_graphs(n):
        edges = tuple((u, v) if g.kinds[u] is VertexKind.WHITE else (v, u) for u, v in g.edges)
        index = {e: i for i, e in enumerate(edges)}
        whites = g.vertices_of(VertexKind.WHITE)
        others = [v for v in g.kinds if g.kinds[v] is not VertexKind.WHITE]
        oidx = {v: i for i, v in enumerate(others)}
        auts = graph_automorphisms(g)
        edge_auts = np.array([[index[(a[w], a[c])] for w, c in edges] for a in auts], dtype=np.int64)
        out.append(
            _PointType(
                graph=g,
                edges=edges,
                whites=whites,
                white_edges=tuple(tuple(i for i, e in enumerate(edges) if e[0] == w) for w in whites),
                other_index=tuple(oidx[c] for _, c in edges),
                edge_auts=edge_auts,
            )
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# Raw gluings


def _white_bijections(a: _PointType, b: _PointType) -> Iterator[tuple[int, ...]]:
    """Degree-preserving bijections: tuple of indices into ``b.whites`` per white of ``a``."""
    da = [len(e) for e in a.white_edges]
    db = [len(e) for e in b.white_edges]
    if sorted(da) != sorted(db):
        return
    for perm in itertools.permutations(range(len(db))):
        if all(da[i] == db[j] for i, j in enumerate(perm)):
            yield perm


def _gluing_array(a: _PointType, b: _PointType) -> np.ndarray:
    """All raw gluings as rows ``sigma`` (edge of a -> edge of b), in enumeration order."""
    m = len(a.edges)
    blocks = []
    for perm in _white_bijections(a, b):
        positions, options = [], []
        for i, j in enumerate(perm):
            src, dst = a.white_edges[i], b.white_edges[j]
            positions.append(list(src))
            options.append(np.array(list(itertools.permutations(dst)), dtype=np.int64).reshape(-1, len(dst)))
        shape = tuple(len(o) for o in options)
        idx = np.unravel_index(np.arange(int(np.prod(shape))), shape)
        rows = np.empty((len(idx[0]), m), dtype=np.int64)
        for pos, opt, ix in zip(positions, options, idx):
            rows[:, pos] = opt[ix]
        blocks.append(rows)
    if not blocks:
        return np.zeros((0, m), dtype=np.int64)
    return np.concatenate(blocks)


def _gluing_map(a: _PointType, b: _PointType, sigma: Sequence[int]) -> GluingMap:
    white_match: dict[int, int] = {}
    edge_match: dict[int, dict[int, int]] = {}
    for e, f in enumerate(sigma):
        w, c = a.edges[e]
        w2, g2 = b.edges[int(f)]
        white_match[w] = w2
        edge_match.setdefault(w, {})[c] = g2
    return GluingMap(white_match, edge_match)


def enumerate_gluings(a: PointGraph, b: PointGraph) -> list[GluingMap]:
    """Every degree-preserving white bijection with every family of incident-edge bijections.

    ``a`` is white-black and ``b`` white-gray (a white-black ``b`` is read
    with gray in place of black). No deduplication.
    """
    require(validate_point_graph(a), "point graph")
    require(validate_point_graph(b), "point graph")
    if a.n != b.n:
        raise GluingError(f"complexity mismatch: {a.n} vs {b.n}")
    if b.other_color is VertexKind.BLACK:
        b = as_gray(b)
    ta, tb = _ad_hoc_type(a), _ad_hoc_type(b)
    return [_gluing_map(ta, tb, row) for row in _gluing_array(ta, tb)]


def _ad_hoc_type(g: PointGraph) -> _PointType:
    edges = tuple((u, v) if g.kinds[u] is VertexKind.WHITE else (v, u) for u, v in g.edges)
    whites = g.vertices_of(VertexKind.WHITE)
    others = [v for v in g.kinds if g.kinds[v] is not VertexKind.WHITE]
    oidx = {v: i for i, v in enumerate(others)}
    return _PointType(
        graph=g,
        edges=edges,
        whites=whites,
        white_edges=tuple(tuple(i for i, e in enumerate(edges) if e[0] == w) for w in whites),
        other_index=tuple(oidx[c] for _, c in edges),
        edge_auts=np.arange(len(edges), dtype=np.int64)[None, :],
    )


# ---------------------------------------------------------------------------
# Classes per type pair


def _pair_representatives(n: int, i: int, j: int) -> np.ndarray:
    """One gluing row per class for the ordered type pair (i, j), sorted by orbit key."""
    types = _point_types(n)
    a, b = types[i], types[j]
    m = 2 * n - 1
    raw = _gluing_array(a, b)
    if len(raw) == 0:
        return raw
    mask = _kernels.admissible_mask(raw, np.array(a.other_index), np.array(b.other_index), n)
    adm = raw[mask]
    if len(a.edge_auts) * len(b.edge_auts) <= ORBIT_GROUP_LIMIT:
        alpha_inv = np.argsort(a.edge_auts, axis=1)
        keys = np.unique(_kernels.orbit_keys(adm, alpha_inv, b.edge_auts, m))
        return _kernels.decode_keys(keys, m, m)
    seen: dict[CanonicalCode, np.ndarray] = {}
    b_gray = as_gray(b.graph)
    bt = _ad_hoc_type(b_gray)
    for row in adm:
        g = glue(a.graph, b_gray, _gluing_map(a, bt, row))
        seen.setdefault(canonical_code(g, Relation.CONJUGACY), row)
    return np.array([seen[k] for k in sorted(seen)], dtype=np.int64).reshape(-1, m)


def _type_pairs(n: int) -> list[tuple[int, int]]:
    types = _point_types(n)
    return [(i, j) for i, a in enumerate(types) for j, b in enumerate(types) if a.degrees == b.degrees]


def _pair_graphs(n: int, i: int, j: int) -> list[DistinguishingGraph]:
    types = _point_types(n)
    a = types[i]
    b_gray = as_gray(types[j].graph)
    bt = _ad_hoc_type(b_gray)
    return [glue(a.graph, b_gray, _gluing_map(a, bt, row)) for row in _pair_representatives(n, i, j)]


def _pair_job(args: tuple[int, int, int]) -> tuple[tuple[int, int], list[DistinguishingGraph]]:
    n, i, j = args
    return (i, j), _pair_graphs(n, i, j)


@lru_cache(maxsize=None)
def _oriented_by_pair(n: int, workers: int = 1) -> tuple[tuple[tuple[int, int], tuple[DistinguishingGraph, ...]], ...]:
    jobs = [(n, i, j) for i, j in _type_pairs(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pair_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_pair_job(job) for job in jobs]
    return tuple((pair, tuple(graphs)) for pair, graphs in sorted(results))


# ---------------------------------------------------------------------------
# Public enumeration API


def enumerate_functions(
    n: int,
    relation: Relation | str = Relation.CONJUGACY,
    sign_mode: SignMode | str = SignMode.ORIENTED,
    workers: int = 1,
) -> list[DistinguishingGraph]:
    """Class representatives of distinguishing graphs of complexity n, sorted by code.

    ``sign_mode`` selects all-+1 white signs (``oriented``), sign vectors
    that are not all equal (``nonoriented``), or both (``all``).
    """
    _check_n(n)
    relation, sign_mode = Relation(relation), SignMode(sign_mode)
    if relation is Relation.LOCAL_ISO:
        raise ValueError("distinguishing graphs are classified by conjugacy or equivalence")
    classes = _classes(int(n), relation, sign_mode, workers)
    return [g for _, g in classes]


def _classes(n: int, relation: Relation, sign_mode: SignMode, workers: int = 1) -> list[tuple[CanonicalCode, DistinguishingGraph]]:
    found: dict[CanonicalCode, DistinguishingGraph] = {}
    for _, graphs in _oriented_by_pair(n, workers):
        for g in graphs:
            if sign_mode is SignMode.ORIENTED:
                variants = [g]
            else:
                variants = [
                    g.with_signs(orbit.representative)
                    for orbit in sign_orbits(g)
                    if sign_mode is SignMode.ALL or not orbit.oriented
                ]
            for h in variants:
                found.setdefault(canonical_code(h, relation), h)
    return sorted(found.items())


def count_classes(n: int, relation: Relation | str = Relation.CONJUGACY, sign_mode: SignMode | str = SignMode.ORIENTED) -> int:
    return len(enumerate_functions(n, relation, sign_mode))


# ---------------------------------------------------------------------------
# Pair-count matrix


@dataclass(frozen=True)
class PairCountMatrix:
    entries: np.ndarray
    type_codes: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.type_codes)

    @property
    def total(self) -> int:
        return int(self.entries.sum())

    def to_csv(self) -> str:
        header = "," + ",".join(str(i + 1) for i in range(self.size))
        rows = [f"{i + 1}," + ",".join(str(int(x)) for x in row) for i, row in enumerate(self.entries)]
        return "\n".join([header] + rows) + "\n"


def pair_count_matrix(n: int) -> PairCountMatrix:
    """Entry (i, j): conjugacy classes glued from type i (white-black) and type j (white-gray)."""
    _check_n(n)
    types = _point_types(int(n))
    entries = np.zeros((len(types), len(types)), dtype=np.int64)
    for (i, j), graphs in _oriented_by_pair(int(n)):
        entries[i, j] = len(graphs)
    return PairCountMatrix(entries, tuple(canonical_tree_code(t.graph).hex() for t in types))


def type_pair(g: DistinguishingGraph) -> tuple[int, int]:
    """Indices of the white-black and white-gray point graphs of ``g``."""
    a, b, _ = split(g)
    return point_type_index(a), point_type_index(b)


# ---------------------------------------------------------------------------
# Path-pair permutation encoding


def _path_order(g: DistinguishingGraph, color: VertexKind) -> dict[int, int]:
    """Junction -> position along the path obtained by deleting the third color."""
    K = VertexKind
    adj = g.adjacency
    keep = {v for v, k in g.kinds.items() if k in (K.WHITE, color, K.JUNCTION)}
    sub = {v: [u for u in adj[v] if u in keep] for v in keep}
    if any(len(nb) > 2 for nb in sub.values()):
        raise GraphError(f"white-{color.value} graph is not a path")
    ends = [v for v in keep if g.kinds[v] is color and len(sub[v]) == 1]
    if len(ends) != 1:
        raise GraphError(f"white-{color.value} graph is not a path")
    order: dict[int, int] = {}
    prev, cur = None, ends[0]
    while True:
        if g.kinds[cur] is K.JUNCTION:
            order[cur] = len(order) + 1
        nxt = [u for u in sub[cur] if u != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
    return order


def permutation_encoding(g: DistinguishingGraph) -> tuple[int, ...]:
    """Junction positions along the white-black path mapped to positions along the white-gray path.

    Both paths are numbered from their degree-1 colored (black, gray) end.
    The last junction sits at the degree-1 white end of both paths and is
    always fixed, so it is dropped: the result permutes 1..2n-2.
    """
    require(validate_distinguishing(g), "distinguishing graph")
    black = _path_order(g, VertexKind.BLACK)
    gray = _path_order(g, VertexKind.GRAY)
    m = len(black)
    perm = [0] * m
    for t, i in black.items():
        perm[i - 1] = gray[t]
    if perm[-1] != m:
        raise AssertionError("last junction must be fixed")
    return tuple(perm[:-1])


def path_type_index(n: int) -> int:
    """Index of the white-black path among the point-graph types."""
    for i, t in enumerate(_point_types(n)):
        if all(len(nb) <= 2 for nb in t.graph.adjacency.values()):
            return i
    raise AssertionError("path type missing")


def swap_black_gray(g: DistinguishingGraph) -> DistinguishingGraph:
    kinds = {
        v: {VertexKind.BLACK: VertexKind.GRAY, VertexKind.GRAY: VertexKind.BLACK}.get(k, k)
        for v, k in g.kinds.items()
    }
    return DistinguishingGraph(kinds, g.edges, g.signs)


def check_enumerated(graphs: Sequence[DistinguishingGraph]) -> None:
    for g in graphs:
        require(validate_distinguishing(g), "enumerated graph")
