"""Component-wise connectivity and (minimal) S-cores.

An S-core is the subgraph induced by the union of some blocks that covers
S and, inside every component of G it touches, is connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from depthlab.blocks import mask_blocks_and_cuts
from depthlab.errors import InvalidInputError
from depthlab.graph import (
    Graph,
    check_vertex_set,
    induced_subgraph,
    iter_bits,
    mask_components,
    mask_is_connected,
    mask_of,
    set_of,
)


def _cw_connected(adj: Sequence[int], full: int, h: int) -> bool:
    for comp in mask_components(adj, full):
        piece = comp & h
        if piece and not mask_is_connected(adj, piece):
            return False
    return True


def is_component_wise_connected(graph: Graph, vertices: Iterable[int]) -> bool:
    h = mask_of(check_vertex_set(graph, vertices))
    return _cw_connected(graph.masks, graph.full_mask, h)


def _union(block_masks: Sequence[int], chosen: Iterable[int]) -> int:
    u = 0
    for i in chosen:
        u |= block_masks[i]
    return u


def is_s_core(graph: Graph, terminals: Iterable[int], block_indices: Iterable[int]) -> bool:
    """True iff the blocks picked by ``block_indices`` (into ``blocks(graph)``) induce an S-core."""
    s = mask_of(check_vertex_set(graph, terminals))
    found, _ = mask_blocks_and_cuts(graph.masks, graph.full_mask)
    chosen = list(block_indices)
    if any(not 0 <= i < len(found) for i in chosen):
        raise InvalidInputError(f"block index out of range 0..{len(found) - 1}")
    u = _union(found, chosen)
    return s & ~u == 0 and _cw_connected(graph.masks, graph.full_mask, u)


@dataclass(frozen=True)
class SCore:
    """A minimal S-core: the induced subgraph, the chosen block indices, and
    ``vertices[i]`` = original index of core vertex ``i``."""

    graph: Graph
    blocks: tuple[int, ...]
    vertices: tuple[int, ...]

    def relabel(self, members: Iterable[int]) -> frozenset[int]:
        index = {v: i for i, v in enumerate(self.vertices)}
        return frozenset(index[v] for v in members)


def minimal_s_core(graph: Graph, terminals: Iterable[int]) -> SCore:
    """An inclusion-minimal S-core.

    Components avoiding S are dropped.  Leaf blocks whose private vertices
    (all but the attaching cut-vertex) avoid S are pruned to a fixed point,
    then any block whose removal still leaves an S-core is dropped.
    """
    members = check_vertex_set(graph, terminals)
    s = mask_of(members)
    adj = graph.masks
    found, _ = mask_blocks_and_cuts(adj, graph.full_mask)
    keep_region = 0
    for comp in mask_components(adj, graph.full_mask):
        if comp & s:
            keep_region |= comp
    chosen = {i for i, b in enumerate(found) if b & keep_region}

    def shared(i: int) -> int:
        other = _union(found, (j for j in chosen if j != i))
        return found[i] & other

    changed = True
    while changed:
        changed = False
        for i in sorted(chosen):
            attach = shared(i)
            if attach.bit_count() <= 1 and not (found[i] & ~attach & s):
                chosen.discard(i)
                changed = True

    def core_ok(pick: set[int]) -> bool:
        u = _union(found, pick)
        return s & ~u == 0 and _cw_connected(adj, graph.full_mask, u)

    changed = True
    while changed:
        changed = False
        for i in sorted(chosen):
            if core_ok(chosen - {i}):
                chosen.discard(i)
                changed = True

    picked = tuple(sorted(chosen))
    core_vertices = tuple(iter_bits(_union(found, picked)))
    sub, _ = induced_subgraph(graph, core_vertices)
    return SCore(sub, picked, core_vertices)


def core_vertex_set(graph: Graph, block_indices: Iterable[int]) -> frozenset[int]:
    found, _ = mask_blocks_and_cuts(graph.masks, graph.full_mask)
    return set_of(_union(found, block_indices))
