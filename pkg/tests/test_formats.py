import json
import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricrit.enumeration import SignMode, enumerate_functions, enumerate_point_graphs
from tricrit.formats import DocumentError, dumps, from_document, loads, to_document, to_dot
from tricrit.graphs import CircleArrangement, tree_from_arrangement

CORPUS = (
    [g for n in (1, 2, 3) for g in enumerate_functions(n, "conjugacy", SignMode.ALL)]
    + enumerate_functions(4)
    + [g for n in (1, 2, 3, 4) for g in enumerate_point_graphs(n)]
    + [tree_from_arrangement(CircleArrangement.from_parens(t)) for t in ("", "()", "(())()", "((()))()")]
)


@given(st.sampled_from(CORPUS))
@settings(max_examples=100, deadline=None)
def test_round_trip(g):
    assert loads(dumps(g)) == g


def test_round_trip_everything():
    for g in CORPUS:
        back = loads(dumps(g))
        assert back == g and type(back) is type(g)


def test_key_order_is_stable(fig8):
    text = dumps(fig8)
    assert list(json.loads(text)) == ["version", "class", "vertices", "edges"]
    assert dumps(loads(text)) == text


def test_signs_default_to_plus(n1_star):
    doc = to_document(n1_star)
    del doc["vertices"][0]["sign"]
    assert from_document(doc).signs == {0: 1}


def _doc(**changes):
    doc = {
        "version": 1,
        "class": "distinguishing",
        "vertices": [{"id": 0, "kind": "white"}, {"id": 1, "kind": "black"}, {"id": 2, "kind": "gray"}, {"id": 3, "kind": "t"}],
        "edges": [[0, 3], [1, 3], [2, 3]],
    }
    doc.update(changes)
    return doc


@pytest.mark.parametrize(
    "doc",
    [
        _doc(version=2),
        _doc(**{"class": "hypergraph"}),
        _doc(vertices=[{"id": 0, "kind": "white"}, {"id": 0, "kind": "black"}]),
        _doc(vertices=[{"id": 0, "kind": "region"}]),
        _doc(vertices=[{"id": -1, "kind": "white"}]),
        _doc(vertices=[{"id": 0, "kind": "purple"}]),
        _doc(vertices=[{"id": 1, "kind": "black", "sign": 1}]),
        _doc(vertices=[{"id": 0, "kind": "white", "sign": 0}]),
        _doc(edges=[[0, 9]]),
        _doc(edges=[[0]]),
        _doc(edges="none"),
        [],
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(DocumentError):
        from_document(doc)


def test_invalid_json():
    with pytest.raises(DocumentError):
        loads("{not json")


def test_dot_export_is_well_formed(fig8):
    w = fig8.vertices_of(fig8.kinds[0])[0]
    dot = to_dot(fig8.with_signs({w: -1}))
    assert dot.startswith('graph "G" {') and dot.rstrip().endswith("}")
    assert dot.count("--") == len(fig8.edges)
    assert '"-1"' in dot and "fillcolor=gray" in dot and "shape=point" in dot
    for line in dot.splitlines()[1:-1]:
        assert re.fullmatch(r"  v\d+ (\[.*\]|-- v\d+);", line)


def test_dot_is_parseable_by_pydot(fig8):
    pydot = pytest.importorskip("pydot")
    (graph,) = pydot.graph_from_dot_data(to_dot(fig8))
    assert len(graph.get_edges()) == len(fig8.edges)
