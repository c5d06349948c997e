from dataclasses import replace

import pytest
from hypothesis import given, settings

from depthlab.constructions import complete_graph, cycle_graph, ladder, path_graph
from depthlab.errors import CapacityError, InvalidInputError
from depthlab.graph import build_graph, delete_vertices
from depthlab.harness import corpus_profiles
from depthlab.params import (
    CertNode,
    DepthCertificate,
    DepthSolver,
    check_certificate,
    elimination_set,
    measure,
    treedepth,
    treedepth2,
    treedepth_relative,
)

from conftest import graphs, graphs_with_subset, ref_td, ref_td2, ref_tds, to_nx


def test_treedepth_examples():
    assert treedepth(build_graph(0, []))[0] == 0
    for m in range(1, 9):
        assert treedepth(complete_graph(m))[0] == m
    assert treedepth(path_graph(7))[0] == 3
    assert [treedepth(path_graph(m))[0] for m in range(1, 10)] == [1, 2, 2, 3, 3, 3, 3, 4, 4]


def test_treedepth2_examples():
    assert treedepth2(build_graph(0, []))[0] == 0
    assert treedepth2(build_graph(1, []))[0] == 1
    for m in range(2, 13):
        assert treedepth2(path_graph(m))[0] == 2
    for m in range(3, 13):
        assert treedepth2(cycle_graph(m))[0] == 3
    value, cert = treedepth2(ladder(4))
    assert value >= 2 and check_certificate(ladder(4), cert)
    assert value == 4


def test_relative_examples():
    g = cycle_graph(6)
    assert treedepth_relative(g, [])[0] == 0
    assert treedepth_relative(g, range(6))[0] == treedepth(g)[0]
    assert treedepth_relative(path_graph(5), [0, 4])[0] == 2
    with pytest.raises(InvalidInputError):
        treedepth_relative(g, [6])


def test_elimination_set_examples():
    assert elimination_set(cycle_graph(5), range(5), []) == frozenset()
    k3 = complete_graph(3)
    x = elimination_set(k3, range(3), [0])
    assert x == {0}
    rest, index = delete_vertices(k3, x)
    assert 3 <= 1 + treedepth_relative(rest, [index[v] for v in range(3) if v not in x])[0]
    assert elimination_set(path_graph(3), range(3), [1]) == {1}
    with pytest.raises(InvalidInputError):
        elimination_set(k3, [0], [5])


@settings(max_examples=150, deadline=None)
@given(graphs_with_subset(max_n=7), graphs_with_subset(max_n=7))
def test_elimination_set_inequality(gs, other):
    g, s = gs
    sub = frozenset(v for v in other[1] if v < g.n)
    x = elimination_set(g, s, sub)
    assert sub <= x
    rest, index = delete_vertices(g, x)
    lhs = treedepth_relative(g, s)[0]
    rhs = treedepth_relative(g, sub)[0] + treedepth_relative(rest, [index[v] for v in s - x])[0]
    assert lhs <= rhs


def test_certificate_examples():
    k3 = complete_graph(3)
    _, cert = treedepth(k3)
    assert check_certificate(k3, cert)
    assert not check_certificate(k3, replace(cert, value=cert.value + 1))
    assert not check_certificate(k3, replace(cert, value=cert.value - 1))
    # component-style split of P3 is not a block recursion
    p3 = path_graph(3)
    mid = CertNode(frozenset({0, 1, 2}), 1, (CertNode(frozenset({0}), 0), CertNode(frozenset({2}), 2)))
    assert check_certificate(p3, DepthCertificate("td", 2, (mid,)))
    assert not check_certificate(p3, DepthCertificate("td2", 2, (mid,)))
    assert check_certificate(p3, treedepth2(p3)[1])


def test_certificate_json_round_trip():
    g = cycle_graph(7)
    for kind, terms in [("td", None), ("td2", None), ("tds", [0, 3])]:
        _, cert = measure(g, kind, terms)
        back = DepthCertificate.from_json(cert.to_json())
        assert back == cert and check_certificate(g, back)


def test_certificate_rejects_tampering():
    g = cycle_graph(5)
    _, cert = treedepth(g)
    root = cert.forest[0]
    bad = replace(cert, forest=(replace(root, delete=99),))
    assert not check_certificate(g, bad)
    assert not check_certificate(g, replace(cert, kind="nope"))


def test_capacity():
    with pytest.raises(CapacityError):
        treedepth(build_graph(65, []))
    with pytest.raises(InvalidInputError):
        measure(path_graph(2), "pw2")


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_against_reference_recursions(g):
    h = to_nx(g)
    v1, c1 = treedepth(g)
    v2, c2 = treedepth2(g)
    assert v1 == ref_td(h)
    assert v2 == ref_td2(h)
    assert check_certificate(g, c1) and check_certificate(g, c2)
    assert v2 <= v1


@settings(max_examples=200, deadline=None)
@given(graphs_with_subset(max_n=7))
def test_relative_against_reference(gs):
    g, s = gs
    value, cert = treedepth_relative(g, s)
    assert value == ref_tds(to_nx(g), s)
    assert check_certificate(g, cert)
    assert value <= treedepth(g)[0]


def test_apex_rule_matches_plain_definition():
    # the profiles use the plain recursion; the default solver uses the apex shortcut
    for pr in corpus_profiles(6, (), 0, 1):
        solver = DepthSolver(pr.graph)
        assert solver.td(pr.graph.full_mask) == pr.td
        assert solver.td2(pr.graph.full_mask) == pr.td2
