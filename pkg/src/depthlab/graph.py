"""Immutable simple graphs on vertices 0..n-1, with bitmask views.

Vertex subsets travel as ``frozenset`` at the public surface and as Python
ints (bit ``v`` set iff ``v`` is a member) inside the exact solvers.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from depthlab.errors import CapacityError, InvalidInputError

MAX_BITSET_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph.

    ``adj[v]`` is the neighbourhood of ``v``.  Build instances with
    :func:`build_graph`; the constructor does not validate.
    """

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        return tuple(mask_of(nb) for nb in self.adj)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_text(self) -> str:
        lines = [f"p {self.n} {self.m}"]
        lines.extend(f"e {u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise InvalidInputError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise InvalidInputError(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


def _from_masks(masks: Sequence[int]) -> Graph:
    return Graph(len(masks), tuple(set_of(m) for m in masks))


def require_bitset_capacity(graph: Graph, limit: int = MAX_BITSET_VERTICES) -> None:
    if graph.n > limit:
        raise CapacityError(f"graph has {graph.n} vertices; this solver accepts at most {limit}")


def check_vertex_set(graph: Graph, vertices: Iterable[int]) -> frozenset[int]:
    members = frozenset(int(v) for v in vertices)
    bad = [v for v in members if not 0 <= v < graph.n]
    if bad:
        raise InvalidInputError(f"vertices {sorted(bad)} are not in a graph on {graph.n} vertices")
    return members


# -- bitmask kernels ------------------------------------------------------

def mask_components(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, by minimum vertex."""
    comps = []
    rest = mask
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def mask_is_connected(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return False
    comp = frontier = mask & -mask
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & mask & ~comp
        comp |= new
        frontier |= new
    return comp == mask


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shortest_path(graph: Graph, source: int, target: int, within: Iterable[int] | None = None) -> tuple[int, ...] | None:
    """A BFS shortest path from source to target, optionally inside a vertex subset."""
    allowed = None if within is None else set(within)
    parent = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for w in sorted(graph.adj[u]):
            if w not in parent and (allowed is None or w in allowed):
                parent[w] = u
                queue.append(w)
    if target not in parent:
        return None
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


# -- public operations ----------------------------------------------------

def components(graph: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their minimum vertex."""
    seen = [False] * graph.n
    out = []
    for s in range(graph.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in graph.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(graph: Graph) -> bool:
    return len(components(graph)) == 1


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices`` plus the order-preserving old->new index map."""
    keep = sorted(check_vertex_set(graph, vertices))
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(frozenset(index[w] for w in graph.adj[v] if w in index) for v in keep)
    return Graph(len(keep), adj), index


def delete_vertices(graph: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    gone = check_vertex_set(graph, removed)
    return induced_subgraph(graph, (v for v in range(graph.n) if v not in gone))


def is_path(graph: Graph, seq: Sequence[int]) -> bool:
    if not seq:
        return False
    if any(not (isinstance(v, int) and 0 <= v < graph.n) for v in seq):
        return False
    if len(set(seq)) != len(seq):
        return False
    return all(graph.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_induced_path(graph: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a path of ``graph`` with no shortcut."""
    if not is_path(graph, seq):
        return False
    pos = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        for w in graph.adj[v]:
            j = pos.get(w)
            if j is not None and abs(i - j) > 1:
                return False
    return True


def diameter(graph: Graph) -> int:
    if graph.n == 0:
        raise InvalidInputError("the null graph has no diameter")
    best = 0
    for s in range(graph.n):
        dist = bfs_distances(graph, s)
        if min(dist) < 0:
            raise InvalidInputError("diameter is undefined for a disconnected graph")
        best = max(best, max(dist))
    return best


def is_apex(graph: Graph, v: int) -> bool:
    if not 0 <= v < graph.n:
        raise InvalidInputError(f"vertex {v} is not in a graph on {graph.n} vertices")
    return graph.degree(v) == graph.n - 1


def clique_number(graph: Graph) -> int:
    """Size of a maximum clique (Bron-Kerbosch with pivoting over bitmasks)."""
    adj = graph.masks
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            if not excl:
                best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(iter_bits(cand | excl), key=lambda u: (adj[u] & cand).bit_count())
        for v in iter_bits(cand & ~adj[pivot]):
            bit = 1 << v
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit

    expand(0, graph.full_mask, 0)
    return best


# -- file formats ---------------------------------------------------------

def parse_text(text: str) -> Graph:
    """Parse the ``p <n> <m>`` / ``e <u> <v>`` format (0-based; ``c`` lines are comments)."""
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p" and len(parts) == 3 and n is None:
                n, m = int(parts[1]), int(parts[2])
            elif parts[0] == "e" and len(parts) == 3 and n is not None:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise InvalidInputError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise InvalidInputError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise InvalidInputError(f"header announces {m} edges but {len(edges)} were given")
    return build_graph(n, edges)


def parse_json(payload: dict | str) -> Graph:
    data = json.loads(payload) if isinstance(payload, str) else payload
    try:
        n = int(data["n"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed graph JSON: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise InvalidInputError("every edge must be a pair")
    return build_graph(n, edges)


def load_graph(path: str) -> tuple[Graph, dict]:
    """Read a graph file; returns the graph and the raw JSON document (empty for text)."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        doc = json.loads(text)
        return parse_json(doc), doc
    return parse_text(text), {}
