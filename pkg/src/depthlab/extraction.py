"""Long induced paths from long paths in graphs of bounded 2-treedepth.

Given a path P on n vertices in a graph G with td2(G[V(P)]) <= k + 1,
``extract_induced_path`` returns an induced path on at least n^(1/k) / 2
vertices:

* k = 1: td2 <= 2 means G[V(P)] is a forest, so P itself is induced.
* otherwise, walk P through the cut-vertices of G[V(P)].  Stitching
  shortest paths between consecutive cut-vertices inside each block gives
  an induced path through all r cut-vertices and both ends of P.  If
  r + 2 is already large enough, return it.  Else some block is big; delete
  a vertex that lowers its 2-treedepth, keep the longer half of P inside
  that block that avoids it, and recurse with k - 1.

Threshold tests are done in integers: r >= n^(1/k)/2 - 2 becomes
(2(r + 2))^k >= n.
"""

from __future__ import annotations

from typing import Sequence

from depthlab.blocks import mask_blocks_and_cuts
from depthlab.errors import InvalidInputError
from depthlab.graph import Graph, induced_subgraph, is_induced_path, is_path, shortest_path
from depthlab.params import DepthSolver


def guarantee_met(order: int, n: int, k: int) -> bool:
    """order >= n^(1/k) / 2, compared exactly."""
    return (2 * order) ** k >= n


def extract_induced_path(graph: Graph, path: Sequence[int], k: int) -> tuple[int, ...]:
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    if not is_path(graph, list(path)):
        raise InvalidInputError("the given sequence is not a path of the graph")
    sub, index = induced_subgraph(graph, path)
    back = {i: v for v, i in index.items()}
    solver = DepthSolver(sub)
    if solver.td2(sub.full_mask) > k + 1:
        raise InvalidInputError(f"2-treedepth of the path's vertex set exceeds k + 1 = {k + 1}")
    local = [index[v] for v in path]
    found = _extract(sub, local, k)
    result = tuple(back[v] for v in found)
    if not is_induced_path(graph, result):
        raise AssertionError("extraction produced a non-induced path")
    return result


def _extract(graph: Graph, ham: list[int], k: int) -> list[int]:
    """``ham`` is a Hamiltonian path of ``graph`` and td2(graph) <= k + 1."""
    n = len(ham)
    if k == 1 or n <= 2:
        return list(ham)
    _, cut_mask = mask_blocks_and_cuts(graph.masks, graph.full_mask)
    anchors = [0] + [i for i in range(1, n - 1) if (cut_mask >> ham[i]) & 1] + [n - 1]
    r = len(anchors) - 2

    stitched: list[int] = [ham[0]]
    for a, b in zip(anchors, anchors[1:]):
        piece = shortest_path(graph, ham[a], ham[b], within=ham[a:b + 1])
        stitched.extend(piece[1:])
    if not is_induced_path(graph, stitched):
        raise AssertionError("stitched cut-vertex path is not induced")
    if guarantee_met(r + 2, n, k):
        return stitched

    # some block has at least 2 n^(1-1/k) + 1 vertices, i.e. (size-1)^k >= 2^k n^(k-1)
    chosen = None
    for a, b in zip(anchors, anchors[1:]):
        size = b - a + 1
        if (size - 1) ** k >= 2 ** k * n ** (k - 1):
            chosen = (a, b)
            break
    if chosen is None:
        raise AssertionError("no block reaches the size guaranteed by the counting argument")
    a, b = chosen
    block_path = ham[a:b + 1]
    block, bindex = induced_subgraph(graph, block_path)
    bback = {i: v for v, i in bindex.items()}
    solver = DepthSolver(block)
    drop = bback[solver.td2_choice(block.full_mask)]
    cut_at = block_path.index(drop)
    left, right = block_path[:cut_at], block_path[cut_at + 1:]
    half = left if len(left) >= len(right) else right
    inner, iindex = induced_subgraph(graph, half)
    iback = {i: v for v, i in iindex.items()}
    found = _extract(inner, [iindex[v] for v in half], k - 1)
    return [iback[v] for v in found]
