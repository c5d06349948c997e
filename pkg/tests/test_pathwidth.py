import pytest
from hypothesis import given, settings

from depthlab.constructions import complete_graph, cycle_graph, intersection_graph, IntervalRepresentation, ladder, path_graph, star_graph
from depthlab.errors import CapacityError
from depthlab.graph import build_graph
from depthlab.pathwidth import interval_model, ordering_cost, pathwidth, pathwidth_with_ordering, vertex_separation_dp

from conftest import graphs


def test_examples():
    for m in range(1, 8):
        assert pathwidth(complete_graph(m)) == m - 1
    for m in range(2, 10):
        assert pathwidth(path_graph(m)) == 1
    assert pathwidth(cycle_graph(5)) == 2
    assert vertex_separation_dp(cycle_graph(5)) == 2
    assert pathwidth(build_graph(0, [])) == 0
    assert pathwidth(build_graph(3, [])) == 0
    assert pathwidth(star_graph(5)) == 1
    assert pathwidth(ladder(5)) == 2


def test_dp_capacity():
    with pytest.raises(CapacityError):
        vertex_separation_dp(path_graph(21))
    with pytest.raises(CapacityError):
        pathwidth(build_graph(65, []))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_search_matches_subset_dp(g):
    value, order = pathwidth_with_ordering(g)
    assert value == vertex_separation_dp(g)
    assert sorted(order) == list(range(g.n))
    assert ordering_cost(g, order) == value


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_ordering_gives_interval_supergraph(g):
    value, order = pathwidth_with_ordering(g)
    rep = IntervalRepresentation(tuple(interval_model(g, order)))
    sup, omega = intersection_graph(rep)
    assert all(sup.has_edge(u, v) for u, v in g.edges)
    # clique number of the interval model is one more than the width
    assert omega == (value + 1 if g.n else 0)
