import sys

import pytest

from tricrit.enumeration import enumerate_functions
from tricrit.graphs import DistinguishingGraph, VertexKind

K = VertexKind


def star() -> DistinguishingGraph:
    return DistinguishingGraph({0: K.WHITE, 1: K.BLACK, 2: K.GRAY, 3: K.JUNCTION}, ((0, 3), (1, 3), (2, 3)))


def figure_eight() -> DistinguishingGraph:
    """The unique complexity-2 graph: a 6-cycle through junctions with pendant colored vertices."""
    return enumerate_functions(2)[0]


@pytest.fixture
def n1_star():
    return star()


@pytest.fixture
def fig8():
    return figure_eight()


def shuffled(g, rng):
    ids = list(g.kinds)
    perm = ids[:]
    rng.shuffle(perm)
    return g.relabel(dict(zip(ids, [p + 100 for p in perm])))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} | {detail}")
