"""Complexity-5 checks; run with ``pytest -m slow``."""
import pytest

from tricrit import _kernels
from tricrit.enumeration import enumerate_functions, enumerate_point_graphs, pair_count_matrix

from test_acceptance import structural_violations

pytestmark = pytest.mark.slow


def test_n5_point_graphs():
    assert len(enumerate_point_graphs(5)) == 65


def test_n5_structural_invariants():
    graphs = enumerate_functions(5)
    assert len(graphs) == 7065
    assert [g for g in graphs if structural_violations(g)] == []


def test_n5_matrix_is_symmetric():
    m = pair_count_matrix(5)
    assert (m.entries == m.entries.T).all() and m.total == 7065


def test_n5_numpy_backend_agrees():
    from tricrit.enumeration import _pair_representatives, _type_pairs

    pairs = _type_pairs(5)[::25]
    prev = _kernels.set_backend("numpy")
    try:
        slow = [_pair_representatives(5, i, j).tolist() for i, j in pairs]
    finally:
        _kernels.set_backend(prev)
    assert slow == [_pair_representatives(5, i, j).tolist() for i, j in pairs]
