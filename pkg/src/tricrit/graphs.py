"""Graph data model: local trees, point graphs, distinguishing graphs.

All graph classes share one immutable representation: a mapping from
opaque non-negative integer vertex ids to a :class:`VertexKind`, a tuple of
undirected edges, and (for distinguishing graphs) a sign on every white
vertex. Validators never raise; they return a :class:`ValidationReport`.
Operations that require valid input raise :class:`InvalidGraphError`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from types import MappingProxyType
from typing import ClassVar, Iterable, Mapping, Sequence


class GraphError(ValueError):
    pass


class InvalidGraphError(GraphError):
    def __init__(self, report: "ValidationReport", what: str = "graph"):
        self.report = report
        super().__init__(f"invalid {what}: {report.summary()}")


class GluingError(GraphError):
    pass


class SignError(GraphError):
    pass


class VertexKind(str, Enum):
    REGION = "region"
    WHITE = "white"
    BLACK = "black"
    GRAY = "gray"
    JUNCTION = "t"


COLORS = (VertexKind.WHITE, VertexKind.BLACK, VertexKind.GRAY)


class Sign(IntEnum):
    PLUS = 1
    MINUS = -1


def _check_sign(value: int) -> int:
    if value not in (1, -1):
        raise GraphError(f"sign must be +1 or -1, got {value!r}")
    return int(value)


# ---------------------------------------------------------------------------
# Small graph utilities shared by validators


def _adjacency(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def components(vertices: Sequence[int], edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj = _adjacency(vertices, edges)
    seen: set[int] = set()
    out = []
    for root in vertices:
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def find_cycle_edge(vertices: Sequence[int], edges: Iterable[tuple[int, int]]) -> tuple[int, int] | None:
    """First edge (in the given order) closing a cycle, or None for a forest."""
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return (u, v)
        parent[ru] = rv
    return None


def is_tree(vertices: Sequence[int], edges: Sequence[tuple[int, int]]) -> bool:
    if not vertices:
        return False
    return find_cycle_edge(vertices, edges) is None and len(components(vertices, edges)) == 1


# ---------------------------------------------------------------------------
# Graph classes


@dataclass(frozen=True, eq=False)
class Graph:
    kinds: Mapping[int, VertexKind]
    edges: tuple[tuple[int, int], ...]
    signs: Mapping[int, int] = field(default_factory=dict)

    graph_class: ClassVar[str] = "graph"

    def __post_init__(self) -> None:
        kinds = {}
        for v, k in sorted(self.kinds.items()):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise GraphError(f"vertex ids must be non-negative integers, got {v!r}")
            kinds[v] = VertexKind(k)
        edges = []
        for e in self.edges:
            u, v = e
            if u not in kinds or v not in kinds:
                raise GraphError(f"edge {tuple(e)} references an unknown vertex")
            edges.append((u, v) if u <= v else (v, u))
        edges.sort()
        signs = {}
        for v, s in sorted(dict(self.signs).items()):
            if v not in kinds:
                raise GraphError(f"sign given for unknown vertex {v}")
            signs[v] = _check_sign(s)
        object.__setattr__(self, "kinds", MappingProxyType(kinds))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "signs", MappingProxyType(signs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph) or type(self) is not type(other):
            return NotImplemented
        return (
            dict(self.kinds) == dict(other.kinds)
            and self.edges == other.edges
            and dict(self.signs) == dict(other.signs)
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(self.kinds.items()), self.edges, tuple(self.signs.items())))

    def __reduce__(self):
        # mapping proxies do not pickle; needed for process-pool enumeration
        return (type(self), (dict(self.kinds), self.edges, dict(self.signs)))

    def __repr__(self) -> str:
        counts = {k.value: len(self.vertices_of(k)) for k in VertexKind if self.vertices_of(k)}
        return f"{type(self).__name__}(|V|={len(self.kinds)}, |E|={len(self.edges)}, kinds={counts})"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.kinds)

    @property
    def adjacency(self) -> dict[int, list[int]]:
        return _adjacency(self.kinds, self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def vertices_of(self, kind: VertexKind) -> tuple[int, ...]:
        return tuple(v for v, k in self.kinds.items() if k is kind)

    @property
    def n(self) -> int:
        """Number of white vertices (the complexity for point and distinguishing graphs)."""
        return len(self.vertices_of(VertexKind.WHITE))

    def relabel(self, mapping: Mapping[int, int]):
        """Copy of the graph with vertex ``v`` renamed ``mapping[v]``."""
        if sorted(mapping) != sorted(self.kinds) or len(set(mapping.values())) != len(mapping):
            raise GraphError("relabeling must be a bijection on the vertex ids")
        return type(self)(
            {mapping[v]: k for v, k in self.kinds.items()},
            tuple((mapping[u], mapping[v]) for u, v in self.edges),
            {mapping[v]: s for v, s in self.signs.items()},
        )

    def compact(self):
        """Relabel vertices to 0..|V|-1 preserving id order."""
        return self.relabel({v: i for i, v in enumerate(self.kinds)})

    def induced(self, keep: Iterable[int]) -> tuple[list[int], list[tuple[int, int]]]:
        keep = set(keep)
        verts = [v for v in self.kinds if v in keep]
        return verts, [(u, v) for u, v in self.edges if u in keep and v in keep]


class LocalTree(Graph):
    graph_class = "local-tree"


class PointGraph(Graph):
    graph_class = "point-graph"

    @property
    def other_color(self) -> VertexKind | None:
        others = {k for k in self.kinds.values() if k is not VertexKind.WHITE}
        return others.pop() if len(others) == 1 else None


class SubdividedPointGraph(Graph):
    graph_class = "subdivided-point-graph"


class DistinguishingGraph(Graph):
    graph_class = "distinguishing"

    def __post_init__(self) -> None:
        super().__post_init__()
        signs = dict(self.signs)
        for v, k in self.kinds.items():
            if k is VertexKind.WHITE and v not in signs:
                signs[v] = 1
        object.__setattr__(self, "signs", MappingProxyType(dict(sorted(signs.items()))))

    def with_signs(self, signs: Mapping[int, int]) -> "DistinguishingGraph":
        return DistinguishingGraph(self.kinds, self.edges, signs)

    def negated(self) -> "DistinguishingGraph":
        return self.with_signs({v: -s for v, s in self.signs.items()})

    @property
    def white_signs(self) -> tuple[int, ...]:
        return tuple(self.signs[v] for v in self.vertices_of(VertexKind.WHITE))

    @property
    def is_oriented(self) -> bool:
        return len(set(self.white_signs)) <= 1

    @property
    def cycle_rank(self) -> int:
        return len(self.edges) - len(self.kinds) + len(components(self.vertices, self.edges))


GRAPH_CLASSES: dict[str, type[Graph]] = {
    cls.graph_class: cls for cls in (LocalTree, PointGraph, DistinguishingGraph)
}


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str
    ids: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.rule}: {v.detail}" for v in self.violations)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"rule": v.rule, "detail": v.detail, "ids": [list(i) if isinstance(i, tuple) else i for i in v.ids]}
                for v in self.violations
            ],
        }


def _simple_checks(g: Graph, out: list[Violation]) -> None:
    seen = set()
    for e in g.edges:
        if e[0] == e[1]:
            out.append(Violation("simple", f"self-loop at {e[0]}", (e,)))
        elif e in seen:
            out.append(Violation("simple", f"repeated edge {e}", (e,)))
        seen.add(e)


def _tree_checks(verts: Sequence[int], edges: Sequence[tuple[int, int]], out: list[Violation], prefix: str = "") -> None:
    if not verts:
        out.append(Violation(prefix + "nonempty", "graph has no vertices"))
        return
    comps = components(verts, edges)
    if len(comps) > 1:
        out.append(Violation(prefix + "connected", f"{len(comps)} components", tuple(c[0] for c in comps)))
    cyc = find_cycle_edge(verts, edges)
    if cyc is not None:
        out.append(Violation(prefix + "acyclic", f"edge {cyc} closes a cycle", (cyc,)))


def validate_local_tree(g: Graph) -> ValidationReport:
    out: list[Violation] = []
    bad = [v for v, k in g.kinds.items() if k is not VertexKind.REGION]
    if bad:
        out.append(Violation("vertex kinds", "local trees only have region vertices", tuple(bad)))
    _simple_checks(g, out)
    _tree_checks(g.vertices, g.edges, out)
    if g.kinds and len(g.kinds) != len(g.edges) + 1:
        out.append(Violation("vertex-edge count", f"|V|={len(g.kinds)} but |E|+1={len(g.edges) + 1}"))
    return ValidationReport(tuple(out))


def validate_point_graph(g: Graph) -> ValidationReport:
    out: list[Violation] = []
    present = set(g.kinds.values())
    allowed_other = present - {VertexKind.WHITE}
    if not allowed_other <= {VertexKind.BLACK, VertexKind.GRAY} or len(allowed_other) > 1:
        bad = [v for v, k in g.kinds.items() if k not in (VertexKind.WHITE, VertexKind.BLACK, VertexKind.GRAY)]
        out.append(Violation("vertex kinds", "point graphs use white and exactly one of black/gray", tuple(bad)))
    _simple_checks(g, out)
    _tree_checks(g.vertices, g.edges, out)
    mono = [(u, v) for u, v in g.edges if (g.kinds[u] is VertexKind.WHITE) == (g.kinds[v] is VertexKind.WHITE)]
    if mono:
        out.append(Violation("proper coloring", f"{len(mono)} edges join equal color classes", tuple(mono)))
    whites = len(g.vertices_of(VertexKind.WHITE))
    others = len(g.kinds) - whites
    if whites != others:
        out.append(Violation("equal color counts", f"color classes have sizes {whites} and {others}"))
    if whites == 0:
        out.append(Violation("complexity", "n must be at least 1"))
    return ValidationReport(tuple(out))


def validate_distinguishing(g: Graph) -> ValidationReport:
    out: list[Violation] = []
    K = VertexKind
    bad = [v for v, k in g.kinds.items() if k is K.REGION]
    if bad:
        out.append(Violation("vertex kinds", "region vertices are not allowed", tuple(bad)))
    _simple_checks(g, out)
    counts = {c: len(g.vertices_of(c)) for c in COLORS}
    n = counts[K.WHITE]
    if len(set(counts.values())) != 1:
        out.append(Violation("equal color counts", ", ".join(f"{c.value}={m}" for c, m in counts.items())))
    if n == 0:
        out.append(Violation("complexity", "n must be at least 1"))
    adj = g.adjacency
    junctions = g.vertices_of(K.JUNCTION)
    wrong_deg = [t for t in junctions if len(adj[t]) != 3]
    if wrong_deg:
        out.append(Violation("junction degree", "junctions must have degree 3", tuple(wrong_deg)))
    wrong_edges = [(u, v) for u, v in g.edges if (g.kinds[u] is K.JUNCTION) == (g.kinds[v] is K.JUNCTION)]
    if wrong_edges:
        out.append(Violation("colored-junction edges", "every edge joins a colored vertex to a junction", tuple(wrong_edges)))
    mixed = [t for t in junctions if sorted(g.kinds[u].value for u in adj[t]) != ["black", "gray", "white"]]
    if mixed:
        out.append(Violation("junction neighbor colors", "junction neighbors must be one white, one black, one gray", tuple(mixed)))
    for color in COLORS:
        verts, edges = g.induced(v for v, k in g.kinds.items() if k is not color)
        sub: list[Violation] = []
        _tree_checks(verts, edges, sub)
        for viol in sub:
            out.append(Violation(f"{color.value}-deletion tree", f"removing {color.value} vertices: {viol.rule} ({viol.detail})", viol.ids))
    if n:
        if len(junctions) != 2 * n - 1:
            out.append(Violation("junction count", f"expected {2 * n - 1}, got {len(junctions)}"))
        if len(g.edges) != 3 * (2 * n - 1):
            out.append(Violation("edge count", f"expected {3 * (2 * n - 1)}, got {len(g.edges)}"))
        comps = components(g.vertices, g.edges)
        rank = len(g.edges) - len(g.kinds) + len(comps)
        if len(comps) != 1 or rank != n - 1:
            out.append(Violation("cycle rank", f"expected connected with cycle rank {n - 1}, got {len(comps)} components and rank {rank}"))
    whites = set(g.vertices_of(K.WHITE))
    missing = sorted(whites - set(g.signs))
    extra = sorted(set(g.signs) - whites)
    if missing or extra:
        out.append(Violation("signs", "signs must be given exactly on white vertices", tuple(missing + extra)))
    return ValidationReport(tuple(out))


def require(report: ValidationReport, what: str) -> None:
    if not report.ok:
        raise InvalidGraphError(report, what)


# ---------------------------------------------------------------------------
# Circle arrangements and local trees


@dataclass(frozen=True)
class CircleArrangement:
    """Nesting forest of disjoint circles on a sphere.

    ``forest`` holds the circles lying directly in the base region; each
    circle is itself the tuple of circles lying directly inside it.
    """

    forest: tuple = ()

    def __post_init__(self) -> None:
        def freeze(node) -> tuple:
            return tuple(freeze(c) for c in node)

        object.__setattr__(self, "forest", freeze(self.forest))

    @classmethod
    def from_parens(cls, text: str) -> "CircleArrangement":
        """Parse a balanced-parenthesis string; each ``(...)`` is one circle."""
        stack: list[list] = [[]]
        for pos, ch in enumerate(text):
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if len(stack) == 1:
                    raise GraphError(f"unbalanced ')' at position {pos}")
                node = stack.pop()
                stack[-1].append(tuple(node))
            elif not ch.isspace():
                raise GraphError(f"unexpected character {ch!r} at position {pos}")
        if len(stack) != 1:
            raise GraphError(f"{len(stack) - 1} unclosed '('")
        return cls(tuple(stack[0]))

    def to_parens(self) -> str:
        def render(node) -> str:
            return "".join("(" + render(c) + ")" for c in node)

        return render(self.forest)

    @property
    def circle_count(self) -> int:
        def count(node) -> int:
            return sum(1 + count(c) for c in node)

        return count(self.forest)


def tree_from_arrangement(a: CircleArrangement) -> LocalTree:
    """Regions of the sphere as vertices, circles as edges.

    Vertex 0 is the base region; regions are numbered in depth-first order.
    The rooting is forgotten: the result is an unrooted tree.
    """
    edges: list[tuple[int, int]] = []
    counter = [0]

    def walk(node: tuple, region: int) -> None:
        for circle in node:
            counter[0] += 1
            inside = counter[0]
            edges.append((region, inside))
            walk(circle, inside)

    walk(a.forest, 0)
    return LocalTree({v: VertexKind.REGION for v in range(counter[0] + 1)}, tuple(edges))


# ---------------------------------------------------------------------------
# Subdivision and gluing


def subdivide(g: PointGraph) -> SubdividedPointGraph:
    require(validate_point_graph(g), "point graph")
    kinds = dict(g.kinds)
    edges = []
    nxt = max(kinds) + 1
    for u, v in g.edges:
        kinds[nxt] = VertexKind.JUNCTION
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    return SubdividedPointGraph(kinds, tuple(edges))


@dataclass(frozen=True)
class GluingMap:
    """Identification data for gluing a white-black with a white-gray point graph.

    ``white_match[w]`` is the white vertex of the second graph glued to ``w``.
    ``edge_match[w][c]`` names the edge ``(w, c)`` of the first graph by its
    colored endpoint ``c`` and maps it to the gray endpoint of the matching
    edge at ``white_match[w]`` in the second graph.
    """

    white_match: Mapping[int, int]
    edge_match: Mapping[int, Mapping[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "white_match", MappingProxyType(dict(sorted(self.white_match.items()))))
        em = {w: MappingProxyType(dict(sorted(m.items()))) for w, m in sorted(self.edge_match.items())}
        object.__setattr__(self, "edge_match", MappingProxyType(em))

    def __reduce__(self):
        return (type(self), (dict(self.white_match), {w: dict(m) for w, m in self.edge_match.items()}))


def check_gluing(a: PointGraph, b: PointGraph, m: GluingMap) -> None:
    """Raise :class:`GluingError` unless ``m`` is an admissible identification map."""
    require(validate_point_graph(a), "white-black point graph")
    require(validate_point_graph(b), "white-gray point graph")
    if a.other_color is not VertexKind.BLACK:
        raise GluingError("first graph must be white-black")
    if b.other_color is not VertexKind.GRAY:
        raise GluingError("second graph must be white-gray")
    if a.n != b.n:
        raise GluingError(f"complexity mismatch: {a.n} vs {b.n}")
    wa, wb = set(a.vertices_of(VertexKind.WHITE)), set(b.vertices_of(VertexKind.WHITE))
    wm = dict(m.white_match)
    if set(wm) != wa or set(wm.values()) != wb or len(set(wm.values())) != len(wm):
        raise GluingError("white match is not a bijection between the white vertices")
    adj_a, adj_b = a.adjacency, b.adjacency
    for w, w2 in wm.items():
        if len(adj_a[w]) != len(adj_b[w2]):
            raise GluingError(f"white {w} has degree {len(adj_a[w])} but its partner {w2} has degree {len(adj_b[w2])}")
        em = dict(m.edge_match.get(w, {}))
        if set(em) != set(adj_a[w]) or set(em.values()) != set(adj_b[w2]) or len(set(em.values())) != len(em):
            raise GluingError(f"edge match at white {w} is not a bijection of incident edges")


def glue(a: PointGraph, b: PointGraph, m: GluingMap) -> DistinguishingGraph:
    """Glue subdivided copies of ``a`` (white-black) and ``b`` (white-gray).

    Result ids: whites of ``a`` in id order, then blacks of ``a``, grays of
    ``b``, and junctions in the edge order of ``a``. All signs are +1.
    """
    check_gluing(a, b, m)
    K = VertexKind
    whites = a.vertices_of(K.WHITE)
    blacks = a.vertices_of(K.BLACK)
    grays = b.vertices_of(K.GRAY)
    ids: dict[tuple[str, int], int] = {}
    kinds: dict[int, VertexKind] = {}
    for tag, verts, kind in (("a", whites, K.WHITE), ("a", blacks, K.BLACK), ("b", grays, K.GRAY)):
        for v in verts:
            ids[(tag, v)] = len(kinds)
            kinds[len(kinds)] = kind
    edges = []
    for u, v in a.edges:
        w, c = (u, v) if a.kinds[u] is K.WHITE else (v, u)
        t = len(kinds)
        kinds[t] = K.JUNCTION
        edges += [(ids[("a", w)], t), (ids[("a", c)], t), (ids[("b", m.edge_match[w][c])], t)]
    return DistinguishingGraph(kinds, tuple(edges))


def split(g: DistinguishingGraph) -> tuple[PointGraph, PointGraph, GluingMap]:
    """Recover the white-black graph, the white-gray graph and the gluing map.

    Both point graphs keep the vertex ids of ``g``; ``glue`` on the result
    reproduces ``g`` up to relabeling.
    """
    require(validate_distinguishing(g), "distinguishing graph")
    K = VertexKind
    adj = g.adjacency
    kinds_a = {v: k for v, k in g.kinds.items() if k in (K.WHITE, K.BLACK)}
    kinds_b = {v: k for v, k in g.kinds.items() if k in (K.WHITE, K.GRAY)}
    edges_a, edges_b = [], []
    white_match: dict[int, int] = {}
    edge_match: dict[int, dict[int, int]] = {}
    for t in g.vertices_of(K.JUNCTION):
        nb = {g.kinds[u]: u for u in adj[t]}
        w, bl, gr = nb[K.WHITE], nb[K.BLACK], nb[K.GRAY]
        edges_a.append((w, bl))
        edges_b.append((w, gr))
        white_match[w] = w
        edge_match.setdefault(w, {})[bl] = gr
    return PointGraph(kinds_a, tuple(edges_a)), PointGraph(kinds_b, tuple(edges_b)), GluingMap(white_match, edge_match)


def recolor(g: Graph, permutation: Mapping[VertexKind, VertexKind], discard_signs: bool = False) -> Graph:
    """Permute the colors white/black/gray; structure is unchanged.

    When white vertices change color the old orientation numbers have no
    meaning on the new white class; this is only allowed when all signs are
    equal or ``discard_signs`` is set, and the new white class gets +1.
    """
    perm = {c: c for c in VertexKind}
    perm.update(permutation)
    if sorted(perm[c].value for c in COLORS) != sorted(c.value for c in COLORS):
        raise GraphError("color permutation must permute white, black and gray")
    if perm[VertexKind.REGION] is not VertexKind.REGION or perm[VertexKind.JUNCTION] is not VertexKind.JUNCTION:
        raise GraphError("only white, black and gray may be recolored")
    kinds = {v: perm[k] for v, k in g.kinds.items()}
    if perm[VertexKind.WHITE] is VertexKind.WHITE:
        signs = dict(g.signs)
    else:
        if len(set(g.signs.values())) > 1 and not discard_signs:
            raise SignError("recoloring white vertices would drop non-uniform signs; use swap_with_signs or discard_signs")
        signs = {v: 1 for v, k in kinds.items() if k is VertexKind.WHITE} if isinstance(g, DistinguishingGraph) else {}
    return type(g)(kinds, g.edges, signs)
