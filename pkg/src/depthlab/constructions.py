"""Graph families: the nested-clique lower-bound graphs, the chain graphs
with their interval models, ladders, and a few small named graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from depthlab.errors import InvalidInputError
from depthlab.graph import Graph, build_graph

Edges = tuple[tuple[int, int], ...]


# -- small named graphs ---------------------------------------------------

def path_graph(m: int) -> Graph:
    return build_graph(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise InvalidInputError(f"a cycle needs at least 3 vertices, got {m}")
    return build_graph(m, [(i, (i + 1) % m) for i in range(m)])


def complete_graph(m: int) -> Graph:
    return build_graph(m, combinations(range(m), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(m: int) -> Graph:
    return build_graph(m, [])


def ladder(t: int) -> Graph:
    """The 2 x t grid: rails 0..t-1 and t..2t-1, rung i joins i and t+i."""
    if t < 1:
        raise InvalidInputError(f"ladder length must be at least 1, got {t}")
    edges = [(i, t + i) for i in range(t)]
    edges += [(i, i + 1) for i in range(t - 1)]
    edges += [(t + i, t + i + 1) for i in range(t - 1)]
    return build_graph(2 * t, edges)


# -- nested-clique construction -------------------------------------------

@lru_cache(maxsize=None)
def _grohe(r: int, k: int) -> tuple[int, Edges]:
    if k == 1:
        return 1, ()
    if r == 1:
        return k, tuple(combinations(range(k), 2))
    base_n, base_edges = _grohe(r - 1, k)
    copy_n, copy_edges = _grohe(r, k - 1)
    edges = list(base_edges)
    n = base_n
    for v in range(base_n):
        edges.extend((a + n, b + n) for a, b in copy_edges)
        edges.extend((v, n + i) for i in range(copy_n))
        n += copy_n
    return n, tuple(edges)


@lru_cache(maxsize=None)
def _grohe_size(r: int, k: int) -> int:
    if k == 1:
        return 1
    if r == 1:
        return k
    return _grohe_size(r - 1, k) * (1 + _grohe_size(r, k - 1))


def grohe_size(r: int, k: int) -> int:
    """|V(G_{r,k})| from the size recursion, without building the graph."""
    if r < 1 or k < 1:
        raise InvalidInputError(f"need r, k >= 1, got r={r}, k={k}")
    return _grohe_size(r, k)


def grohe_graph(r: int, k: int) -> Graph:
    """G_{r,k}: G_{r-1,k} with a copy of G_{r,k-1} hung below every vertex.

    G_{r,1} is one vertex and G_{1,k} is K_k.  The base copy is numbered
    first, then the attached copies in base-vertex order.
    """
    if r < 1 or k < 1:
        raise InvalidInputError(f"need r, k >= 1, got r={r}, k={k}")
    n, edges = _grohe(r, k)
    return build_graph(n, edges)


# -- interval models ------------------------------------------------------

@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals, one per vertex."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, (lo, hi) in enumerate(self.intervals):
            if lo > hi:
                raise InvalidInputError(f"interval {i} has left end {lo} > right end {hi}")

    def clique_number(self) -> int:
        """Largest number of intervals sharing a point (sweep; starts before ends on ties)."""
        events = sorted([(lo, 0) for lo, _ in self.intervals] + [(hi, 1) for _, hi in self.intervals])
        load = best = 0
        for _, kind in events:
            load += 1 if kind == 0 else -1
            best = max(best, load)
        return best

    def to_json(self) -> list[list[int]]:
        return [list(iv) for iv in self.intervals]


def intersection_graph(rep: IntervalRepresentation) -> tuple[Graph, int]:
    """Intersection graph of the intervals and its clique number."""
    ivs = rep.intervals
    order = sorted(range(len(ivs)), key=lambda i: ivs[i])
    edges = []
    for a, i in enumerate(order):
        hi = ivs[i][1]
        for j in order[a + 1:]:
            if ivs[j][0] > hi:
                break
            edges.append((i, j))
    return build_graph(len(ivs), edges), rep.clique_number()


# -- chain graphs ---------------------------------------------------------

@dataclass(frozen=True)
class ChainArtifact:
    """G_{ell,k} with its root, a Hamiltonian path ending at the root, and an interval model."""

    ell: int
    k: int
    graph: Graph
    root: int
    ham_path: tuple[int, ...]
    intervals: IntervalRepresentation

    def to_json(self) -> dict:
        doc = self.graph.to_json()
        doc.update(
            family="chain",
            params={"l": self.ell, "k": self.k},
            root=self.root,
            ham_path=list(self.ham_path),
            intervals=self.intervals.to_json(),
        )
        return doc


@lru_cache(maxsize=None)
def _chain(ell: int, k: int):
    if k == 1:
        edges = tuple((i, i + 1) for i in range(ell - 1))
        ivs = tuple((i, i + 1) for i in range(ell))
        return ell, edges, ell - 1, tuple(range(ell)), ivs
    parts = [_chain(s, k - 1) for s in range(1, ell + 1)]
    offsets = []
    n = 0
    for part in parts:
        offsets.append(n)
        n += part[0]
    edges: list[tuple[int, int]] = []
    ham: list[int] = []
    ivs: list[list[int]] = [[0, 0] for _ in range(n)]
    cursor = 0
    part_right = []
    for part, off in zip(parts, offsets):
        pn, pedges, _, pham, pivs = part
        edges.extend((a + off, b + off) for a, b in pedges)
        ham.extend(v + off for v in pham)
        shift = cursor - min(lo for lo, _ in pivs)
        for i, (lo, hi) in enumerate(pivs):
            ivs[off + i] = [lo + shift, hi + shift]
        right = max(hi for _, hi in pivs) + shift
        part_right.append(right)
        cursor = right + 1
    roots = [part[2] + off for part, off in zip(parts, offsets)]
    for s in range(ell - 1):
        nxt_off, nxt_n = offsets[s + 1], parts[s + 1][0]
        edges.extend((roots[s], nxt_off + i) for i in range(nxt_n))
        # reach every interval of the next block, stop short of the one after
        ivs[roots[s]] = [ivs[roots[s]][0], part_right[s + 1]]
    ivs[roots[-1]] = [ivs[roots[-1]][0], part_right[-1] + 1]
    return n, tuple(edges), roots[-1], tuple(ham), tuple(tuple(iv) for iv in ivs)


def chain_size(ell: int, k: int) -> int:
    return comb(ell + k - 1, k)


def chain_graph(ell: int, k: int) -> ChainArtifact:
    """G_{ell,k}: G_{ell,1} is the path P_ell rooted at an end; G_{ell,k+1} is the
    disjoint union of G_{1,k}, ..., G_{ell,k} where the root of each copy is
    joined to every vertex of the next copy, rooted at the last copy's root."""
    if ell < 1 or k < 1:
        raise InvalidInputError(f"need ell, k >= 1, got ell={ell}, k={k}")
    n, edges, root, ham, ivs = _chain(ell, k)
    return ChainArtifact(ell, k, build_graph(n, edges), root, ham, IntervalRepresentation(ivs))
