"""Exact pathwidth through the vertex separation number.

For a vertex ordering, each prefix P costs |N(P) \\ P|; the vertex
separation number is the minimum over orderings of the largest prefix
cost, and it equals pathwidth.  ``pathwidth`` decides "vs <= p" for
p = 0, 1, ... by depth-first search over prefixes, remembering failed
prefixes.  Before branching it greedily appends any vertex that does not
raise the prefix cost; that never hurts because the prefix cost is
submodular.

``vertex_separation_dp`` is the plain subset recursion over the inner
boundary formulation, kept as an independent check for small graphs.
"""

from __future__ import annotations

from depthlab.errors import CapacityError
from depthlab.graph import Graph, iter_bits, require_bitset_capacity

DP_LIMIT = 20


def _decide(adj: tuple[int, ...], full: int, p: int) -> list[int] | None:
    failed: set[int] = set()

    def search(prefix: int, reach: int, order: list[int]) -> list[int] | None:
        while True:
            cost = (reach & ~prefix).bit_count()
            for v in iter_bits(full & ~prefix):
                grown = prefix | (1 << v)
                if ((reach | adj[v]) & ~grown).bit_count() <= cost:
                    prefix, reach = grown, reach | adj[v]
                    order = order + [v]
                    break
            else:
                break
        if prefix == full:
            return order
        if prefix in failed:
            return None
        for v in iter_bits(full & ~prefix):
            grown = prefix | (1 << v)
            nreach = reach | adj[v]
            if (nreach & ~grown).bit_count() <= p:
                found = search(grown, nreach, order + [v])
                if found is not None:
                    return found
        failed.add(prefix)
        return None

    return search(0, 0, [])


def pathwidth_with_ordering(graph: Graph) -> tuple[int, list[int]]:
    """Exact pathwidth and an ordering whose prefix costs never exceed it."""
    require_bitset_capacity(graph)
    adj = graph.masks
    for p in range(max(graph.n, 1)):
        order = _decide(adj, graph.full_mask, p)
        if order is not None:
            return p, order
    raise AssertionError("every ordering has prefix cost below n")


def pathwidth(graph: Graph) -> int:
    return pathwidth_with_ordering(graph)[0]


def ordering_cost(graph: Graph, order: list[int]) -> int:
    """Largest |N(P) \\ P| over the prefixes P of ``order``."""
    adj = graph.masks
    prefix = reach = worst = 0
    for v in order:
        prefix |= 1 << v
        reach |= adj[v]
        worst = max(worst, (reach & ~prefix).bit_count())
    return worst


def interval_model(graph: Graph, order: list[int]) -> list[tuple[int, int]]:
    """Integer intervals whose intersection graph contains ``graph``.

    Vertex ``v`` at position i gets [first position among v and its
    neighbours, i]; the largest point load is ordering_cost(order) + 1.
    """
    pos = {v: i for i, v in enumerate(order)}
    return [
        (min([pos[v]] + [pos[w] for w in graph.adj[v]]), pos[v])
        for v in range(graph.n)
    ]


def vertex_separation_dp(graph: Graph) -> int:
    """Subset recursion f(S) = max(|inner boundary of S|, min_v f(S - v))."""
    if graph.n > DP_LIMIT:
        raise CapacityError(f"subset recursion accepts at most {DP_LIMIT} vertices, got {graph.n}")
    adj = graph.masks
    n = graph.n
    f = [0] * (1 << n)
    for s in range(1, 1 << n):
        outside = ~s
        inner = sum(1 for u in iter_bits(s) if adj[u] & outside)
        f[s] = max(inner, min(f[s & ~(1 << v)] for v in iter_bits(s)))
    return f[(1 << n) - 1]
