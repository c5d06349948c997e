"""Cut-vertices, blocks and the forest of blocks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from depthlab.errors import InvalidInputError
from depthlab.graph import Graph, is_connected, iter_bits, set_of
from depthlab.paths import is_pt_free


def mask_blocks_and_cuts(adj: Sequence[int], mask: int) -> tuple[list[int], int]:
    """Blocks (as bitmasks) and the cut-vertex mask of the subgraph induced by ``mask``.

    Iterative lowpoint DFS with a vertex stack.  Isolated vertices come out
    as singleton blocks.  Blocks are sorted by their sorted vertex lists.
    """
    size = len(adj)
    disc = [-1] * size
    low = [0] * size
    blocks: list[int] = []
    cuts = 0
    clock = 0
    for root in iter_bits(mask):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not adj[root] & mask:
            blocks.append(1 << root)
            continue
        stack = [root]
        frames = [[root, -1, adj[root] & mask]]
        root_children = 0
        while frames:
            frame = frames[-1]
            v, parent, rest = frame
            if rest:
                bit = rest & -rest
                frame[2] = rest ^ bit
                w = bit.bit_length() - 1
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append(w)
                    frames.append([w, v, adj[w] & mask])
                elif w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            frames.pop()
            if not frames:
                break
            u = frames[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                block = 1 << u
                while True:
                    x = stack.pop()
                    block |= 1 << x
                    if x == v:
                        break
                blocks.append(block)
                if u == root:
                    root_children += 1
                else:
                    cuts |= 1 << u
        if root_children > 1:
            cuts |= 1 << root
    blocks.sort(key=lambda b: tuple(iter_bits(b)))
    return blocks, cuts


def mask_is_block(adj: Sequence[int], mask: int) -> bool:
    """True iff the induced subgraph on ``mask`` is connected and has no cut-vertex."""
    found, _ = mask_blocks_and_cuts(adj, mask)
    return len(found) == 1 and found[0] == mask


def cut_vertices(graph: Graph) -> frozenset[int]:
    return set_of(mask_blocks_and_cuts(graph.masks, graph.full_mask)[1])


def blocks(graph: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks, ordered by their sorted vertex lists."""
    found, _ = mask_blocks_and_cuts(graph.masks, graph.full_mask)
    return [set_of(b) for b in found]


@dataclass(frozen=True)
class BlockForest:
    """Bipartite forest on blocks and cut-vertices.

    ``edges`` holds ``(block index, cut index)`` pairs, indices into
    ``blocks`` and ``cuts`` respectively.
    """

    blocks: tuple[frozenset[int], ...]
    cuts: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = field(default=())

    @property
    def node_count(self) -> int:
        return len(self.blocks) + len(self.cuts)

    def node_adjacency(self) -> list[list[int]]:
        """Adjacency lists over nodes: blocks first, then cut-vertices."""
        nb = len(self.blocks)
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for bi, ci in self.edges:
            adj[bi].append(nb + ci)
            adj[nb + ci].append(bi)
        return adj

    def leaves(self) -> list[int]:
        return [i for i, nbrs in enumerate(self.node_adjacency()) if len(nbrs) <= 1]

    def is_tree(self) -> bool:
        if self.node_count == 0:
            return False
        return len(self.edges) == self.node_count - 1 and _reach(self.node_adjacency(), 0)[1] == self.node_count

    def to_json(self) -> dict:
        return {
            "blocks": [sorted(b) for b in self.blocks],
            "cuts": list(self.cuts),
            "edges": [list(e) for e in self.edges],
        }


def block_forest(graph: Graph) -> BlockForest:
    found, cut_mask = mask_blocks_and_cuts(graph.masks, graph.full_mask)
    cuts = tuple(iter_bits(cut_mask))
    cut_index = {v: i for i, v in enumerate(cuts)}
    edges = []
    for bi, b in enumerate(found):
        for v in iter_bits(b & cut_mask):
            edges.append((bi, cut_index[v]))
    return BlockForest(tuple(set_of(b) for b in found), cuts, tuple(edges))


def _reach(adj: list[list[int]], source: int) -> tuple[list[int], int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    seen = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                seen += 1
                queue.append(w)
    return dist, seen


def forest_diameter(forest: BlockForest) -> int:
    """Diameter of the forest of blocks; it must be a tree."""
    if not forest.is_tree():
        raise InvalidInputError("forest of blocks is not a tree (graph null or disconnected)")
    adj = forest.node_adjacency()
    # two sweeps suffice on a tree
    dist, _ = _reach(adj, 0)
    far = max(range(len(adj)), key=dist.__getitem__)
    dist, _ = _reach(adj, far)
    return max(dist)


@dataclass
class P4P5Report:
    """Outcome of the P4/P5 block-structure checks on a connected graph.

    ``items`` maps item number (1-4) to True/False, or None when the
    item's hypotheses do not hold for this graph.
    """

    connected: bool
    forest_diameter: int | None
    p4_free: bool
    p5_free: bool
    items: dict[int, bool | None]

    @property
    def violations(self) -> list[int]:
        return [i for i, ok in self.items.items() if ok is False]

    @property
    def applicable(self) -> list[int]:
        return [i for i, ok in self.items.items() if ok is not None]


def _apex_within(graph: Graph, v: int, members: frozenset[int]) -> bool:
    return all(u == v or graph.has_edge(u, v) for u in members)


def verify_p4p5_structure(graph: Graph) -> P4P5Report:
    """Check the forced block structure of connected P4-free / P5-free graphs.

    1. P4-free, forest diameter 2: the unique cut-vertex is an apex of G.
    2. P5-free, forest diameter 2: at most one block in which the cut-vertex
       is not an apex.
    3. P5-free, forest diameter 4: in every leaf block, its cut-vertex is an
       apex of that block.
    4. P5-free, forest diameter 4: the cut-vertices form a clique.
    """
    items: dict[int, bool | None] = {1: None, 2: None, 3: None, 4: None}
    p4 = is_pt_free(graph, 4)
    p5 = is_pt_free(graph, 5)
    if graph.n == 0 or not is_connected(graph):
        return P4P5Report(False, None, p4, p5, items)
    forest = block_forest(graph)
    diam = forest_diameter(forest)
    cuts = set(forest.cuts)
    if diam == 2:
        (v,) = forest.cuts
        if p4:
            items[1] = _apex_within(graph, v, frozenset(range(graph.n)))
        if p5:
            missing = sum(1 for b in forest.blocks if not _apex_within(graph, v, b))
            items[2] = missing <= 1
    elif diam == 4 and p5:
        ok = True
        for b in forest.blocks:
            inside = cuts & b
            if len(inside) == 1:
                (v,) = inside
                ok = ok and _apex_within(graph, v, b)
        items[3] = ok
        items[4] = all(graph.has_edge(a, b) for a in cuts for b in cuts if a < b)
    return P4P5Report(True, diam, p4, p5, items)
