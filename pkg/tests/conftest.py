from functools import lru_cache
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from depthlab.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def graphs_with_subset(draw, min_n=0, max_n=7):
    g = draw(graphs(min_n, max_n))
    s = draw(st.sets(st.integers(0, max(0, g.n - 1)), max_size=g.n)) if g.n else set()
    return g, frozenset(s)


# -- reference recursions on networkx graphs, written straight from the definitions --

def _key(h: nx.Graph):
    return frozenset(h.nodes), frozenset(frozenset(e) for e in h.edges)


def ref_td(h: nx.Graph) -> int:
    @lru_cache(maxsize=None)
    def go(nodes: frozenset) -> int:
        if not nodes:
            return 0
        sub = h.subgraph(nodes)
        comps = list(nx.connected_components(sub))
        if len(comps) > 1:
            return max(go(frozenset(c)) for c in comps)
        return 1 + min(go(nodes - {v}) for v in nodes)

    return go(frozenset(h.nodes))


def ref_blocks(sub: nx.Graph) -> list[frozenset]:
    out = [frozenset(b) for b in nx.biconnected_components(sub)]
    out += [frozenset([v]) for v in sub.nodes if sub.degree(v) == 0]
    return out


def ref_td2(h: nx.Graph) -> int:
    @lru_cache(maxsize=None)
    def go(nodes: frozenset) -> int:
        if not nodes:
            return 0
        bl = ref_blocks(h.subgraph(nodes))
        if len(bl) > 1:
            return max(go(b) for b in bl)
        return 1 + min(go(nodes - {v}) for v in nodes)

    return go(frozenset(h.nodes))


def ref_tds(h: nx.Graph, s: frozenset) -> int:
    @lru_cache(maxsize=None)
    def go(nodes: frozenset, s: frozenset) -> int:
        if not s:
            return 0
        comps = [frozenset(c) for c in nx.connected_components(h.subgraph(nodes))]
        if len(comps) > 1:
            return max(go(c, s & c) for c in comps)
        return 1 + min(go(nodes - {v}, s - {v}) for v in nodes)

    return go(frozenset(h.nodes), frozenset(s))


def ref_longest_induced_path(h: nx.Graph) -> int:
    best = 0
    nodes = list(h.nodes)
    for size in range(len(nodes), 0, -1):
        for sub in combinations(nodes, size):
            hs = h.subgraph(sub)
            if nx.is_connected(hs) and hs.number_of_edges() == size - 1 and max(dict(hs.degree).values(), default=0) <= 2:
                return size
    return best


@pytest.fixture(scope="session")
def corpus5():
    from depthlab.harness import enumerate_graphs

    return [g for n in range(0, 6) for g in enumerate_graphs(n)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
