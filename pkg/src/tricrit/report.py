"""Markdown regression report: published counts against computed ones."""
from __future__ import annotations

from collections import Counter

from .canon import Relation, canonical_code
from .enumeration import (
    SignMode,
    _classes,
    enumerate_point_graphs,
    pair_count_matrix,
    path_type_index,
    permutation_encoding,
    swap_black_gray,
    type_pair,
)
from .signs import sign_orbits, swap_with_signs
from .tables import PUBLISHED_TOTAL_N4, diff_against_published

PUBLISHED_PATH_PERMUTATIONS = (
    (5, 6, 3, 4, 2, 1), (4, 3, 6, 5, 2, 1), (3, 4, 6, 5, 2, 1), (4, 3, 5, 6, 2, 1),
    (5, 6, 4, 3, 1, 2), (2, 1, 5, 6, 4, 3), (6, 5, 2, 1, 4, 3), (6, 5, 1, 2, 4, 3),
    (5, 6, 1, 2, 4, 3), (6, 5, 2, 1, 3, 4), (5, 6, 2, 1, 3, 4), (2, 1, 6, 5, 3, 4),
    (2, 1, 5, 6, 3, 4), (2, 1, 4, 3, 6, 5), (3, 4, 2, 1, 6, 5), (4, 3, 1, 2, 6, 5),
    (3, 4, 1, 2, 6, 5), (6, 5, 3, 4, 1, 2), (3, 4, 6, 5, 1, 2), (4, 3, 5, 6, 1, 2),
)
# black/gray substitution pairs among the 20 (1-based positions), and the fixed ones
PUBLISHED_BG_PAIRS = ((1, 18), (2, 7), (3, 8), (4, 10), (6, 12), (9, 19), (11, 20), (15, 16))
PUBLISHED_BG_FIXED = (5, 13, 14, 17)
PUBLISHED_TABLE_DIAGONAL = (20, 8, 4, 4, 2, 1, 1, 1)
PUBLISHED_N3_SIGN_ORBITS = (2, 2, 3, 3, 3, 3)


def _reflect(p: tuple[int, ...]) -> tuple[int, ...]:
    m = len(p) + 1
    return tuple(m - x for x in reversed(p))


def path_permutations(workers: int = 1) -> dict:
    """The n=4 path-path classes, their encodings and black/gray substitution orbits."""
    n = 4
    path = path_type_index(n)
    classes = [g for _, g in _classes(n, Relation.CONJUGACY, SignMode.ORIENTED, workers) if type_pair(g) == (path, path)]
    encodings = [permutation_encoding(g) for g in classes]
    published = set(PUBLISHED_PATH_PERMUTATIONS)
    if set(encodings) == published:
        convention = "colored degree-1 end = position 1"
    elif {_reflect(p) for p in encodings} == published:
        convention = "reflected: white end = position 1"
        encodings = [_reflect(p) for p in encodings]
    else:
        convention = "colored degree-1 end = position 1 (set differs from the published list)"
    index = {e: i for i, e in enumerate(encodings)}
    orbit_of = {}
    for g, e in zip(classes, encodings):
        swapped = swap_black_gray(g)
        code = canonical_code(swapped, Relation.CONJUGACY)
        partner = next(e2 for g2, e2 in zip(classes, encodings) if canonical_code(g2, Relation.CONJUGACY) == code)
        orbit_of[e] = tuple(sorted((index[e], index[partner])))
    orbits = sorted(set(orbit_of.values()))
    pairs = [o for o in orbits if o[0] != o[1]]
    fixed = [o for o in orbits if o[0] == o[1]]
    # express the orbits in published list positions when the sets agree
    pos = {p: i + 1 for i, p in enumerate(PUBLISHED_PATH_PERMUTATIONS)}
    published_pairs = None
    if set(encodings) == published:
        published_pairs = sorted(tuple(sorted(pos[encodings[i]] for i in set(o))) for o in orbits)
    return {
        "count": len(classes),
        "encodings": sorted(encodings),
        "distinct": len(set(encodings)),
        "convention": convention,
        "matches_published": set(encodings) == published,
        "pairs": len(pairs),
        "fixed": len(fixed),
        "published_positions": published_pairs,
    }


def sign_orbit_counts_n3(workers: int = 1) -> list[int]:
    """Non-uniform sign orbits per oriented equivalence class at n=3."""
    reps = [g for _, g in _classes(3, Relation.EQUIVALENCE, SignMode.ORIENTED, workers)]
    return sorted(sum(1 for o in sign_orbits(g) if not o.oriented) for g in reps)


def swap_symmetric_count(n: int, workers: int = 1) -> int:
    conj = [g for _, g in _classes(n, Relation.CONJUGACY, SignMode.ORIENTED, workers)]
    return sum(
        canonical_code(swap_with_signs(g), Relation.CONJUGACY) == canonical_code(g, Relation.CONJUGACY) for g in conj
    )


def _status(published, computed) -> str:
    return "PASS" if published == computed else "FAIL"


def build_report(workers: int = 1) -> str:
    rows: list[tuple[str, object, object, str]] = []

    def row(label: str, published, computed, status: str | None = None) -> None:
        rows.append((label, published, computed, status or _status(published, computed)))

    for n, published in ((1, 1), (2, 1), (3, 4), (4, 14)):
        row(f"point graphs, n={n}", published, len(enumerate_point_graphs(n)))
    counts = {}
    for n in (1, 2, 3, 4):
        for rel in (Relation.CONJUGACY, Relation.EQUIVALENCE):
            counts[(n, rel)] = len(_classes(n, rel, SignMode.ORIENTED, workers))
    for n, conj, equiv in ((1, 1, 1), (2, 1, 1), (3, 9, 6), (4, 179, 93)):
        row(f"oriented conjugacy classes, n={n}", conj, counts[(n, Relation.CONJUGACY)])
        row(f"oriented equivalence classes, n={n}", equiv, counts[(n, Relation.EQUIVALENCE)])
    non_eq = len(_classes(3, Relation.EQUIVALENCE, SignMode.NONORIENTED, workers))
    non_conj = len(_classes(3, Relation.CONJUGACY, SignMode.NONORIENTED, workers))
    row("non-oriented equivalence classes, n=3", 16, non_eq)
    row("non-oriented conjugacy classes, n=3", 24, non_conj)
    orbit_counts = sign_orbit_counts_n3(workers)
    row("non-uniform sign orbits per n=3 class", list(PUBLISHED_N3_SIGN_ORBITS), orbit_counts)

    perms = path_permutations(workers)
    matrix = pair_count_matrix(4)
    path = path_type_index(4)
    row("path-path classes, n=4", 20, int(matrix.entries[path, path]))
    row("distinct path-path encodings, n=4", 20, perms["distinct"])
    row("black/gray swapped pairs among them", 8, perms["pairs"])
    row("black/gray fixed encodings", 4, perms["fixed"])
    row("encoding set equals published list", True, perms["matches_published"])

    diff = diff_against_published(matrix.entries)
    diag = sorted((int(x) for x in matrix.entries.diagonal() if x), reverse=True)
    row("pair-count matrix symmetric, n=4", True, bool((matrix.entries == matrix.entries.T).all()))
    row("pair-count matrix total, n=4", PUBLISHED_TOTAL_N4, matrix.total)
    row("pair-count diagonal (nonzero), n=4", list(PUBLISHED_TABLE_DIAGONAL), diag)
    row(
        "table cells matched (>= 90% required)",
        f">= {0.9 * diff.published_nonzero:.1f}/{diff.published_nonzero}",
        f"{diff.matched}/{diff.published_nonzero}",
        "PASS" if diff.match_fraction >= 0.9 else "FAIL",
    )

    sym3 = 2 * counts[(3, Relation.EQUIVALENCE)] - counts[(3, Relation.CONJUGACY)]
    sym4 = 2 * counts[(4, Relation.EQUIVALENCE)] - counts[(4, Relation.CONJUGACY)]

    out = ["# Regression report", "", "| quantity | published | computed | status |", "|---|---|---|---|"]
    out += [f"| {label} | {pub} | {comp} | {status} |" for label, pub, comp, status in rows]
    passed = sum(r[3] == "PASS" for r in rows)
    out += ["", f"{passed}/{len(rows)} rows pass.", ""]

    out += ["## Swap-symmetric classes", ""]
    out += [
        f"- n=3: {sym3} conjugacy classes are fixed by the white/black swap "
        f"(2*{counts[(3, Relation.EQUIVALENCE)]} - {sym3} = {counts[(3, Relation.CONJUGACY)]}); direct count {swap_symmetric_count(3, workers)}.",
        f"- n=4: {sym4} fixed (2*{counts[(4, Relation.EQUIVALENCE)]} - {sym4} = {counts[(4, Relation.CONJUGACY)]}); direct count {swap_symmetric_count(4, workers)}.",
        "",
    ]

    out += ["## Path-path encodings (n=4)", "", f"Convention: {perms['convention']}.", ""]
    out += ["```"] + [str(p) for p in perms["encodings"]] + ["```", ""]
    if perms["published_positions"] is not None:
        pairs = [p for p in perms["published_positions"] if len(p) == 2]
        fixed = [p[0] for p in perms["published_positions"] if len(p) == 1]
        out += [
            "Black/gray substitution orbits in published list positions: "
            + ", ".join(f"{a}-{b}" for a, b in pairs)
            + "; fixed: "
            + ", ".join(str(x) for x in fixed)
            + ".",
            "",
        ]

    out += ["## Pair-count matrix (n=4, computed type order)", "", "```", matrix.to_csv().rstrip(), "```", ""]
    out += ["## Table diff", "", "```", diff.render().rstrip(), "```", ""]

    breakdown = Counter()
    for _, g in _classes(4, Relation.EQUIVALENCE, SignMode.ORIENTED, workers):
        i, j = type_pair(g)
        breakdown[tuple(sorted((i + 1, j + 1)))] += 1
    out += ["## Oriented equivalence classes per type pair (n=4)", ""]
    out += [f"- types {i},{j}: {c}" for (i, j), c in sorted(breakdown.items())]
    out += [""]
    return "\n".join(out)
