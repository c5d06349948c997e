import json

import networkx as nx
import pytest
from hypothesis import given, settings

from depthlab.constructions import complete_graph, cycle_graph, path_graph, star_graph
from depthlab.errors import InvalidInputError
from depthlab.graph import (
    build_graph,
    clique_number,
    components,
    delete_vertices,
    diameter,
    induced_subgraph,
    is_apex,
    is_connected,
    is_induced_path,
    is_path,
    load_graph,
    parse_json,
    parse_text,
    shortest_path,
)

from conftest import graphs, to_nx


def test_build_examples():
    null = build_graph(0, [])
    assert null.n == 0 and null.m == 0
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.m == 3
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4 == path_graph(4)


def test_build_rejects_bad_edges():
    with pytest.raises(InvalidInputError):
        build_graph(3, [(0, 0)])
    with pytest.raises(InvalidInputError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InvalidInputError):
        build_graph(-1, [])
    # parallel edges collapse
    assert build_graph(2, [(0, 1), (1, 0)]).m == 1


def test_components_examples():
    assert components(build_graph(0, [])) == []
    assert components(complete_graph(3)) == [frozenset({0, 1, 2})]
    g = build_graph(4, [(0, 1), (1, 2)])
    assert components(g) == [frozenset({0, 1, 2}), frozenset({3})]


def test_induced_subgraph_examples():
    k3, index = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert k3 == complete_graph(3) and index == {0: 0, 1: 1, 2: 2}
    p3, _ = induced_subgraph(cycle_graph(5), {0, 1, 2})
    assert p3 == path_graph(3)
    null, index = induced_subgraph(cycle_graph(5), set())
    assert null.n == 0 and index == {}


def test_delete_vertices_relabels():
    g, index = delete_vertices(path_graph(4), {1})
    assert g.n == 3 and g.m == 1 and index == {0: 0, 2: 1, 3: 2}


def test_induced_path_examples():
    c5 = cycle_graph(5)
    assert is_induced_path(c5, [0, 1, 2, 3])
    assert not is_induced_path(c5, [0, 1, 2, 3, 4])
    assert is_path(c5, [0, 1, 2, 3, 4])
    assert not is_induced_path(complete_graph(3), [0, 1, 2])
    assert not is_path(c5, [0, 2])
    assert not is_path(c5, [0, 1, 0])


def test_diameter_examples():
    assert diameter(complete_graph(5)) == 1
    assert diameter(path_graph(7)) == 6
    assert diameter(cycle_graph(6)) == 3
    with pytest.raises(InvalidInputError):
        diameter(build_graph(2, []))
    with pytest.raises(InvalidInputError):
        diameter(build_graph(0, []))


def test_apex_examples():
    star = star_graph(4)
    assert is_apex(star, 0)
    assert not is_apex(star, 1)
    assert is_apex(build_graph(1, []), 0)


def test_text_round_trip():
    g = cycle_graph(5)
    text = "c a comment\n" + g.to_text()
    assert parse_text(text) == g
    with pytest.raises(InvalidInputError):
        parse_text("p 3 2\ne 0 1\n")
    with pytest.raises(InvalidInputError):
        parse_text("p 3 1\ne 1 1\n")


def test_json_round_trip(tmp_path):
    g = path_graph(4)
    assert parse_json(g.to_json()) == g
    assert parse_json(json.dumps(g.to_json())) == g
    path = tmp_path / "g.json"
    path.write_text(json.dumps({**g.to_json(), "extra": 1}))
    loaded, doc = load_graph(str(path))
    assert loaded == g and doc["extra"] == 1
    tpath = tmp_path / "g.txt"
    tpath.write_text(g.to_text())
    assert load_graph(str(tpath))[0] == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_against_networkx(g):
    h = to_nx(g)
    assert sorted(map(sorted, components(g))) == sorted(sorted(c) for c in nx.connected_components(h))
    if g.n:
        assert is_connected(g) == nx.is_connected(h)
        if nx.is_connected(h):
            assert diameter(g) == nx.diameter(h)
    assert clique_number(g) == max((len(c) for c in nx.find_cliques(h)), default=0)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2))
def test_shortest_paths_are_induced(g):
    h = to_nx(g)
    for t in range(1, g.n):
        sp = shortest_path(g, 0, t)
        if nx.has_path(h, 0, t):
            assert len(sp) - 1 == nx.shortest_path_length(h, 0, t)
            assert is_induced_path(g, sp)
        else:
            assert sp is None
