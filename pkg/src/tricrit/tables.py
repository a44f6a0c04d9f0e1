"""Comparison of computed pair-count matrices with the published n=4 table."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from importlib import resources

import numpy as np

PUBLISHED_TOTAL_N4 = 179


def load_published_table() -> np.ndarray:
    text = resources.files("tricrit").joinpath("data/published_pairs_n4.csv").read_text()
    rows = [r for r in csv.reader(io.StringIO(text)) if r and not r[0].startswith("#")]
    body = rows[1:]
    return np.array([[int(x) if x.strip() else 0 for x in r[1:]] for r in body], dtype=np.int64)


def _components(mat: np.ndarray) -> list[list[int]]:
    support = (mat != 0) | (mat.T != 0)
    seen: set[int] = set()
    out = []
    for start in range(len(mat)):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in np.flatnonzero(support[x]):
                if int(y) not in seen:
                    seen.add(int(y))
                    stack.append(int(y))
        out.append(sorted(comp))
    return out


def _best_block(pub: np.ndarray, comp: np.ndarray, p_idx: list[int], c_idx: list[int]) -> tuple[int, tuple[int, ...]]:
    sub_p = pub[np.ix_(p_idx, p_idx)]
    nz = sub_p != 0
    best = (-1, ())
    for perm in itertools.permutations(c_idx):
        sub_c = comp[np.ix_(perm, perm)]
        score = int(np.count_nonzero(nz & (sub_c == sub_p)))
        if score > best[0]:
            best = (score, perm)
    return best


def align(computed: np.ndarray, published: np.ndarray) -> list[int]:
    """Simultaneous row/column permutation maximizing agreement on nonzero published cells.

    Returns ``mapping`` with ``mapping[p]`` = computed index placed at
    published index ``p``. Exact: published nonzero cells lie inside the
    connected components of the published support, so the objective splits
    over components, which are matched to equal-size computed components.
    """
    if computed.shape != published.shape:
        raise ValueError("matrices must have the same shape")
    comps_p, comps_c = _components(published), _components(computed)
    by_size_p: dict[int, list[list[int]]] = {}
    by_size_c: dict[int, list[list[int]]] = {}
    for c in comps_p:
        by_size_p.setdefault(len(c), []).append(c)
    for c in comps_c:
        by_size_c.setdefault(len(c), []).append(c)
    if {k: len(v) for k, v in by_size_p.items()} != {k: len(v) for k, v in by_size_c.items()}:
        return _align_brute(computed, published)
    mapping = [-1] * len(published)
    for size, pcs in sorted(by_size_p.items()):
        ccs = by_size_c[size]
        scores = {(a, b): _best_block(published, computed, pcs[a], ccs[b]) for a in range(len(pcs)) for b in range(len(ccs))}
        best = max(
            itertools.permutations(range(len(ccs))),
            key=lambda perm: sum(scores[(a, b)][0] for a, b in enumerate(perm)),
        )
        for a, b in enumerate(best):
            for p, c in zip(pcs[a], scores[(a, b)][1]):
                mapping[p] = c
    return mapping


def _align_brute(computed: np.ndarray, published: np.ndarray) -> list[int]:
    if len(published) > 9:
        raise ValueError("support structures differ and the matrix is too large for exhaustive alignment")
    idx = list(range(len(published)))
    return list(_best_block(published, computed, idx, idx)[1])


@dataclass(frozen=True)
class TableDiff:
    mapping: tuple[int, ...]
    matched: int
    published_nonzero: int
    mismatches: tuple[tuple[int, int, int, int], ...]  # (row, col, published, computed), 1-based published indices
    computed_total: int
    published_total: int

    @property
    def match_fraction(self) -> float:
        return self.matched / self.published_nonzero if self.published_nonzero else 1.0

    def render(self) -> str:
        lines = [
            "alignment (published type -> computed type): "
            + ", ".join(f"{p + 1}->{c + 1}" for p, c in enumerate(self.mapping)),
            f"matched nonzero published cells: {self.matched}/{self.published_nonzero} ({100 * self.match_fraction:.1f}%)",
            f"published cell sum: {self.published_total}; stated total: {PUBLISHED_TOTAL_N4}; computed total: {self.computed_total}",
            f"mismatched cells: {len(self.mismatches)}",
        ]
        lines += [f"  ({i},{j}): published {p}, computed {c}" for i, j, p, c in self.mismatches]
        return "\n".join(lines) + "\n"


def diff_against_published(computed: np.ndarray, published: np.ndarray | None = None) -> TableDiff:
    if published is None:
        published = load_published_table()
    mapping = align(computed, published)
    aligned = computed[np.ix_(mapping, mapping)]
    matched = int(np.count_nonzero((published != 0) & (aligned == published)))
    mism = tuple(
        (i + 1, j + 1, int(published[i, j]), int(aligned[i, j]))
        for i in range(len(published))
        for j in range(len(published))
        if published[i, j] != aligned[i, j]
    )
    return TableDiff(
        mapping=tuple(mapping),
        matched=matched,
        published_nonzero=int(np.count_nonzero(published)),
        mismatches=mism,
        computed_total=int(computed.sum()),
        published_total=int(published.sum()),
    )
