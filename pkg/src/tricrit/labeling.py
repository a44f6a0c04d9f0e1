"""Canonical labeling of small vertex-colored graphs.

Individualization-refinement: the partition is seeded by (color, degree),
refined to an equitable partition, and every vertex of the first smallest
non-singleton cell is individualized in turn. Each discrete leaf gives a
labeling; the canonical form is the lexicographically least encoding over
all leaves. No automorphism pruning is done, so the leaves attaining the
minimum are exactly one coset of the automorphism group. Graphs here have
at most a few dozen vertices.
"""
from __future__ import annotations

from typing import Hashable, Sequence

Cells = list[list[int]]


def _refine(cells: Cells, adj: Sequence[Sequence[int]]) -> Cells:
    while True:
        cell_of = [0] * len(adj)
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        out: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(sorted(cell_of[u] for u in adj[v])) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for key in keys:
                    out.append([v for v in cell if sig[v] == key])
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _leaf_key(order: Sequence[int], colors: Sequence, adj: Sequence[Sequence[int]]) -> tuple:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    edges = sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for v in range(len(adj)) for u in adj[v] if u < v)
    return (tuple(colors[v] for v in order), tuple(edges))


def canonical_form(colors: Sequence[Hashable], adj: Sequence[Sequence[int]]) -> tuple[tuple, list[tuple[int, ...]]]:
    """Return ``(key, leaves)`` for a graph on vertices ``0..len(colors)-1``.

    ``key`` is ``(colors in canonical order, sorted canonical edge list)``.
    ``leaves`` lists every labeling ``order`` (``order[i]`` is the vertex at
    canonical position ``i``) attaining ``key``, in discovery order.
    """
    n = len(colors)
    if n == 0:
        return ((), ()), [()]
    seeds = sorted({(colors[v], len(adj[v])) for v in range(n)})
    cells = [[v for v in range(n) if (colors[v], len(adj[v])) == s] for s in seeds]
    best: list = [None, []]

    def search(cells: Cells) -> None:
        cells = _refine(cells, adj)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            order = tuple(c[0] for c in cells)
            key = _leaf_key(order, colors, adj)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, [order]
            elif key == best[0]:
                best[1].append(order)
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(cells)
    return best[0], best[1]


def automorphisms_from_leaves(leaves: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Automorphisms as image tuples ``p[v]``, sorted, from the optimal leaves."""
    first = leaves[0]
    out = set()
    for leaf in leaves:
        p = [0] * len(first)
        for i, v in enumerate(first):
            p[v] = leaf[i]
        out.add(tuple(p))
    return sorted(out)
