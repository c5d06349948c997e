"""Exact longest paths, longest induced paths and P_t-freeness.

All searches are exponential depth-first searches over bitmasks with a
reachability bound; they are meant for graphs of a few dozen vertices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from depthlab.errors import InvalidInputError
from depthlab.graph import (
    Graph,
    check_vertex_set,
    iter_bits,
    mask_components,
    mask_of,
    require_bitset_capacity,
)


class _Found(Exception):
    pass


def _reachable(adj: Sequence[int], tip: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``tip`` through ``allowed`` (tip excluded)."""
    seen = 0
    frontier = adj[tip] & allowed
    while frontier:
        seen |= frontier
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
    return seen


def longest_path(graph: Graph) -> tuple[int, ...]:
    """A path subgraph of maximum order (empty tuple for the null graph)."""
    require_bitset_capacity(graph)
    adj = graph.masks
    best: tuple[int, ...] = ()
    path: list[int] = []
    limit = 0

    def grow(tip: int, used: int) -> None:
        nonlocal best
        if len(path) > len(best):
            best = tuple(path)
            if len(best) == limit:
                raise _Found
        free = graph.full_mask & ~used
        if len(path) + _reachable(adj, tip, free).bit_count() <= len(best):
            return
        for w in iter_bits(adj[tip] & free):
            path.append(w)
            grow(w, used | (1 << w))
            path.pop()

    for comp in sorted(mask_components(adj, graph.full_mask), key=lambda c: -c.bit_count()):
        if comp.bit_count() <= len(best):
            break
        limit = comp.bit_count()
        try:
            for s in iter_bits(comp):
                path.append(s)
                grow(s, 1 << s)
                path.pop()
        except _Found:
            break
    return best


def hamiltonian_path(graph: Graph) -> tuple[int, ...] | None:
    if graph.n == 0:
        return None
    path = longest_path(graph)
    return path if len(path) == graph.n else None


def _induced_search(graph: Graph, starts: int, ends: int, stop_at: int | None = None) -> tuple[int, ...]:
    """Longest induced path whose endpoints lie in ``starts`` and ``ends`` masks.

    Each path is accepted only in the orientation whose first vertex is the
    smaller endpoint, so every induced path is recorded once.  With
    ``stop_at`` the search returns as soon as a path of that order exists.
    """
    adj = graph.masks
    best: tuple[int, ...] = ()
    path: list[int] = []

    def grow(tip: int, used: int, blocked: int) -> None:
        nonlocal best
        start = path[0]
        if len(path) > len(best) and (len(path) == 1 or (tip > start and (ends >> tip) & 1)):
            best = tuple(path)
            if stop_at is not None and len(best) >= stop_at:
                raise _Found
        free = graph.full_mask & ~blocked & ~used
        if len(path) + _reachable(adj, tip, free).bit_count() <= len(best):
            return
        closed_tip = adj[tip] | (1 << tip)
        for w in iter_bits(adj[tip] & free):
            path.append(w)
            grow(w, used | (1 << w), blocked | closed_tip)
            path.pop()

    try:
        for s in iter_bits(starts):
            path.append(s)
            grow(s, 1 << s, 0)
            path.pop()
    except _Found:
        pass
    return best


def longest_induced_path(graph: Graph) -> tuple[int, ...]:
    """An induced path of maximum order (empty tuple for the null graph)."""
    require_bitset_capacity(graph)
    return _induced_search(graph, graph.full_mask, graph.full_mask)


def is_pt_free(graph: Graph, t: int) -> bool:
    """True iff the graph has no induced path on ``t`` vertices."""
    if t < 1:
        raise InvalidInputError(f"t must be at least 1, got {t}")
    require_bitset_capacity(graph)
    if graph.n < t:
        return True
    # any induced path of order >= t contains one of order exactly t
    return len(_induced_search(graph, graph.full_mask, graph.full_mask, stop_at=t)) < t


def longest_induced_s_path(graph: Graph, terminals: Iterable[int]) -> tuple[int, ...] | None:
    """Longest induced path with both endpoints in ``terminals``; None if empty."""
    members = check_vertex_set(graph, terminals)
    require_bitset_capacity(graph)
    if not members:
        return None
    s_mask = mask_of(members)
    return _induced_search(graph, s_mask, s_mask)
