import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import nx_distances
from packnum.families import complete_graph, cycle_graph, path_graph
from packnum.graph import UNREACHABLE, Graph, append_leaves


def test_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # not symmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_graph_is_hashable_value():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


def test_c5_diameter():
    d = cycle_graph(5).distances
    assert max(max(d.row(u)) for u in range(5)) == 2


def test_p4_end_to_end():
    assert path_graph(4).distances[0, 3] == 3


def test_disconnected_is_unreachable():
    g = Graph.from_edges(3, [(0, 1)])
    d = g.distances
    assert d[0, 2] == UNREACHABLE
    assert d[0, 2] > 10 ** 9
    assert g.diameter == UNREACHABLE
    assert len(g.components) == 2


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_distance_matrix_properties(g):
    d = g.distances
    ref = nx_distances(g)
    for u in range(g.n):
        assert d[u, u] == 0
        for v in range(g.n):
            assert d[u, v] == d[v, u]
            assert (d[u, v] == 1) == g.has_edge(u, v)
            assert d[u, v] == ref[u].get(v, UNREACHABLE)
            for w in range(g.n):
                if d[u, v] != UNREACHABLE and d[v, w] != UNREACHABLE:
                    assert d[u, w] <= d[u, v] + d[v, w]


def test_ball():
    d = path_graph(5).distances
    assert d.ball(0, 0) == 0b1
    assert d.ball(0, 2) == 0b111
    assert d.ball(2, 10) == 0b11111


def test_append_zero_leaves_is_noop():
    g = cycle_graph(5)
    assert append_leaves(g, [(v, 0) for v in range(5)]) == g


def test_append_leaf_to_k2_gives_p3():
    from packnum.isomorphism import is_isomorphic

    h = append_leaves(complete_graph(2), [(0, 1)])
    assert is_isomorphic(h, path_graph(3))


def test_append_four_leaves_on_c5():
    h = append_leaves(cycle_graph(5), [(v, 4) for v in range(5)])
    assert h.n == 25
    assert h.max_degree == 6
    # original indices kept
    assert all(h.has_edge(u, v) for u, v in cycle_graph(5).edges())


def test_append_leaves_errors():
    g = cycle_graph(5)
    with pytest.raises(ValueError):
        append_leaves(g, [(5, 1)])
    with pytest.raises(ValueError):
        append_leaves(g, [(0, 1), (0, 2)])
    with pytest.raises(ValueError):
        append_leaves(g, [(0, -1)])


def test_star_and_complete_predicates():
    from packnum.families import star_graph

    assert complete_graph(2).is_star() and complete_graph(2).is_complete()
    assert star_graph(4).is_star()
    assert not path_graph(4).is_star()
    assert not complete_graph(1).is_star()
