"""Orientation numbers: propagation to black/gray vertices, transport under the
white/black swap, and orbits of white sign vectors."""
from __future__ import annotations

from collections import deque
from itertools import product
from typing import NamedTuple

from .graphs import (
    DistinguishingGraph,
    GraphError,
    VertexKind,
    require,
    validate_distinguishing,
)

FullSignAssignment = dict[int, int]


def _junction_triples(g: DistinguishingGraph) -> list[tuple[int, int, int]]:
    adj = g.adjacency
    out = []
    for t in g.vertices_of(VertexKind.JUNCTION):
        nb = {g.kinds[u]: u for u in adj[t]}
        out.append((nb[VertexKind.WHITE], nb[VertexKind.BLACK], nb[VertexKind.GRAY]))
    return out


def propagate_signs(g: DistinguishingGraph, seed_black: int, seed_sign: int = 1, order_seed: int | None = None) -> FullSignAssignment:
    """Extend the white signs of ``g`` to every colored vertex.

    The seed black vertex gets ``seed_sign``; the rest follow from
    sign(white) * sign(black) * sign(gray) = +1 at every junction, walking the
    black-gray tree. ``order_seed`` shuffles the traversal order (the result
    does not depend on it).
    """
    require(validate_distinguishing(g), "distinguishing graph")
    if g.kinds.get(seed_black) is not VertexKind.BLACK:
        raise GraphError(f"seed vertex {seed_black} is not black")
    if seed_sign not in (1, -1):
        raise GraphError("seed sign must be +1 or -1")
    triples = _junction_triples(g)
    incident: dict[int, list[tuple[int, int, int]]] = {}
    for tr in triples:
        incident.setdefault(tr[1], []).append(tr)
        incident.setdefault(tr[2], []).append(tr)
    rng = None
    if order_seed is not None:
        import random

        rng = random.Random(order_seed)
    signs: FullSignAssignment = dict(g.signs)
    signs[seed_black] = seed_sign
    frontier = deque([seed_black])
    while frontier:
        x = frontier.popleft() if rng is None else frontier.pop()
        trs = list(incident.get(x, ()))
        if rng is not None:
            rng.shuffle(trs)
        for w, b, c in trs:
            other = c if x == b else b
            if other not in signs:
                signs[other] = signs[w] * signs[x]
                if rng is None:
                    frontier.append(other)
                else:
                    frontier.insert(rng.randrange(len(frontier) + 1), other)
    return dict(sorted(signs.items()))


def product_rule_holds(g: DistinguishingGraph, signs: FullSignAssignment) -> bool:
    return all(signs[w] * signs[b] * signs[c] == 1 for w, b, c in _junction_triples(g))


def _canonical_black(g: DistinguishingGraph) -> int:
    from .canon import canonical_labeling

    _, order = canonical_labeling(g)
    return next(v for v in order if g.kinds[v] is VertexKind.BLACK)


def swap_with_signs(g: DistinguishingGraph) -> DistinguishingGraph:
    """Exchange white and black; the new white signs are the propagated black signs.

    The propagation is seeded with +1 at the canonically least black vertex;
    the remaining global sign ambiguity is harmless wherever results are
    compared modulo the global flip.
    """
    require(validate_distinguishing(g), "distinguishing graph")
    full = propagate_signs(g, _canonical_black(g), 1)
    kinds = {}
    new_signs = {}
    for v, k in g.kinds.items():
        if k is VertexKind.WHITE:
            kinds[v] = VertexKind.BLACK
        elif k is VertexKind.BLACK:
            kinds[v] = VertexKind.WHITE
            new_signs[v] = full[v]
        else:
            kinds[v] = k
    return DistinguishingGraph(kinds, g.edges, new_signs)


class SignOrbit(NamedTuple):
    representative: dict[int, int]
    size: int

    @property
    def oriented(self) -> bool:
        return len(set(self.representative.values())) <= 1


def _vector_key(vec: tuple[int, ...]) -> tuple[int, ...]:
    # +1 sorts before -1, so the all-plus vector represents the oriented orbit
    return tuple(0 if s == 1 else 1 for s in vec)


def sign_orbits(g: DistinguishingGraph) -> list[SignOrbit]:
    """Orbits of white sign vectors under automorphisms of ``g`` and the global flip.

    The existing signs of ``g`` are ignored. Representatives are the least
    vectors in their orbit, ordering +1 before -1 position by position over
    white ids in increasing order; orbits are listed by representative.
    """
    from .canon import automorphisms

    auts = automorphisms(g)
    whites = g.vertices_of(VertexKind.WHITE)
    index = {w: i for i, w in enumerate(whites)}
    perms = [tuple(index[a[w]] for w in whites) for a in auts]
    seen: set[tuple[int, ...]] = set()
    out = []
    for vec in sorted(product((1, -1), repeat=len(whites)), key=_vector_key):
        if vec in seen:
            continue
        orbit = {vec}
        stack = [vec]
        while stack:
            x = stack.pop()
            images = [tuple(-s for s in x)]
            for p in perms:
                y = [0] * len(x)
                for i, s in enumerate(x):
                    y[p[i]] = s
                images.append(tuple(y))
            for y in images:
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        rep = min(orbit, key=_vector_key)
        out.append(SignOrbit(dict(zip(whites, rep)), len(orbit)))
    out.sort(key=lambda o: _vector_key(tuple(o.representative.values())))
    return out
