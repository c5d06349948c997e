"""Exact treedepth, 2-treedepth and treedepth relative to a vertex set.

All three follow their recursive definitions directly: a disconnected
graph (td, td(G,S)) or a graph with several blocks (td2) takes the maximum
over its parts, and a single part takes one plus the best single-vertex
deletion.  Values are memoised per part bitmask and searched with a
"beat the current best" limit, so a branch stops as soon as it cannot
improve on a vertex already tried.  Among optimal deletions the smallest
vertex index wins, which makes certificates deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from depthlab.blocks import mask_blocks_and_cuts
from depthlab.errors import InvalidInputError
from depthlab.graph import (
    Graph,
    check_vertex_set,
    iter_bits,
    mask_components,
    mask_of,
    require_bitset_capacity,
    set_of,
)

KINDS = ("td", "td2", "tds")
_UNBOUNDED = 1 << 20


@dataclass(frozen=True)
class CertNode:
    """One recursion stage: the part being dismantled and the vertex deleted from it."""

    vertices: frozenset[int]
    delete: int
    children: tuple["CertNode", ...] = ()

    @property
    def depth(self) -> int:
        return 1 + max((c.depth for c in self.children), default=0)

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "delete": self.delete,
            "children": [c.to_json() for c in self.children],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CertNode":
        return cls(
            frozenset(int(v) for v in data["vertices"]),
            int(data["delete"]),
            tuple(cls.from_json(c) for c in data.get("children", ())),
        )


@dataclass(frozen=True)
class DepthCertificate:
    """Recursive witness for a td, td2 or td(G,S) value.

    ``forest`` lists one node per part of the whole graph: components for
    td, blocks for td2, and components meeting ``terminals`` for tds.
    """

    kind: str
    value: int
    forest: tuple[CertNode, ...]
    terminals: frozenset[int] | None = None

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "value": self.value, "forest": [n.to_json() for n in self.forest]}
        if self.terminals is not None:
            doc["terminals"] = sorted(self.terminals)
        return doc

    @classmethod
    def from_json(cls, data: dict) -> "DepthCertificate":
        terms = data.get("terminals")
        return cls(
            data["kind"],
            int(data["value"]),
            tuple(CertNode.from_json(n) for n in data["forest"]),
            None if terms is None else frozenset(int(v) for v in terms),
        )


class DepthSolver:
    """Memoised exact solver for one graph.

    ``apex_rule`` short-circuits a connected part (td) or block (td2) that
    has a vertex adjacent to everything else: deleting that vertex is
    optimal.  Switch it off to get the plain definition, e.g. when testing
    the apex property itself.
    """

    def __init__(self, graph: Graph, apex_rule: bool = True):
        require_bitset_capacity(graph)
        self.graph = graph
        self.adj: Sequence[int] = graph.masks
        self.apex_rule = apex_rule
        # exact values: key -> (value, deleted vertex); lower bounds: key -> bound
        self._td: dict[int, tuple[int, int]] = {}
        self._td_lb: dict[int, int] = {}
        self._td2: dict[int, tuple[int, int]] = {}
        self._td2_lb: dict[int, int] = {}
        self._tds: dict[tuple[int, int], tuple[int, int]] = {}
        self._tds_lb: dict[tuple[int, int], int] = {}
        self._block_cache: dict[int, list[int]] = {}

    # -- helpers --------------------------------------------------------

    def _apex(self, part: int) -> int | None:
        for v in iter_bits(part):
            if (self.adj[v] | (1 << v)) & part == part:
                return v
        return None

    def blocks_of(self, mask: int) -> list[int]:
        hit = self._block_cache.get(mask)
        if hit is None:
            hit = mask_blocks_and_cuts(self.adj, mask)[0]
            self._block_cache[mask] = hit
        return hit

    # -- treedepth ------------------------------------------------------

    def td(self, mask: int, limit: int = _UNBOUNDED) -> int:
        """td of the subgraph on ``mask``; exact when below ``limit``, else some value >= limit."""
        best = 0
        for comp in mask_components(self.adj, mask):
            val = self.td_connected(comp, limit)
            if val >= limit:
                return val
            best = max(best, val)
        return best

    def td_connected(self, part: int, limit: int = _UNBOUNDED) -> int:
        hit = self._td.get(part)
        if hit is not None:
            return hit[0]
        lb = self._td_lb.get(part, 0)
        if lb >= limit:
            return lb
        if part & (part - 1) == 0:
            self._td[part] = (1, part.bit_length() - 1)
            return 1
        apex = self._apex(part) if self.apex_rule else None
        candidates = (apex,) if apex is not None else tuple(iter_bits(part))
        best, choice = limit, -1
        for v in candidates:
            rest = self.td(part & ~(1 << v), best - 1)
            if rest + 1 < best:
                best, choice = rest + 1, v
        if choice < 0:
            self._td_lb[part] = max(lb, limit)
            return max(lb, limit)
        self._td[part] = (best, choice)
        return best

    # -- 2-treedepth ----------------------------------------------------

    def td2(self, mask: int, limit: int = _UNBOUNDED) -> int:
        if not mask:
            return 0
        best = 0
        for block in self.blocks_of(mask):
            val = self.td2_block(block, limit)
            if val >= limit:
                return val
            best = max(best, val)
        return best

    def td2_block(self, block: int, limit: int = _UNBOUNDED) -> int:
        hit = self._td2.get(block)
        if hit is not None:
            return hit[0]
        lb = self._td2_lb.get(block, 0)
        if lb >= limit:
            return lb
        if block & (block - 1) == 0:
            self._td2[block] = (1, block.bit_length() - 1)
            return 1
        apex = self._apex(block) if self.apex_rule else None
        candidates = (apex,) if apex is not None else tuple(iter_bits(block))
        best, choice = limit, -1
        for v in candidates:
            rest = self.td2(block & ~(1 << v), best - 1)
            if rest + 1 < best:
                best, choice = rest + 1, v
        if choice < 0:
            self._td2_lb[block] = max(lb, limit)
            return max(lb, limit)
        self._td2[block] = (best, choice)
        return best

    # -- treedepth relative to a set ------------------------------------

    def tds(self, mask: int, s: int, limit: int = _UNBOUNDED) -> int:
        s &= mask
        if not s:
            return 0
        best = 0
        for comp in mask_components(self.adj, mask):
            if comp & s:
                val = self.tds_connected(comp, s & comp, limit)
                if val >= limit:
                    return val
                best = max(best, val)
        return best

    def tds_connected(self, part: int, s: int, limit: int = _UNBOUNDED) -> int:
        key = (part, s)
        hit = self._tds.get(key)
        if hit is not None:
            return hit[0]
        lb = self._tds_lb.get(key, 0)
        if lb >= limit:
            return lb
        if s & (s - 1) == 0:
            # one terminal: deleting it is the only way to reach 0 below
            self._tds[key] = (1, s.bit_length() - 1)
            return 1
        # td(G,S) <= |S|, so |S| + 1 is a safe opening bound
        best, choice = min(limit, s.bit_count() + 1), -1
        for v in iter_bits(part):
            bit = 1 << v
            rest = self.tds(part & ~bit, s & ~bit, best - 1)
            if rest + 1 < best:
                best, choice = rest + 1, v
        if choice < 0:
            self._tds_lb[key] = max(lb, limit)
            return max(lb, limit)
        self._tds[key] = (best, choice)
        return best

    def tds_choice(self, part: int, s: int) -> int:
        """Smallest optimal deletion for a connected part meeting ``s``."""
        self.tds_connected(part, s)
        return self._tds[(part, s)][1]

    def td_choice(self, part: int) -> int:
        self.td_connected(part)
        return self._td[part][1]

    def td2_choice(self, block: int) -> int:
        self.td2_block(block)
        return self._td2[block][1]

    # -- certificates ---------------------------------------------------

    def td_forest(self, mask: int) -> tuple[CertNode, ...]:
        nodes = []
        for comp in mask_components(self.adj, mask):
            v = self.td_choice(comp)
            nodes.append(CertNode(set_of(comp), v, self.td_forest(comp & ~(1 << v))))
        return tuple(nodes)

    def td2_forest(self, mask: int) -> tuple[CertNode, ...]:
        if not mask:
            return ()
        nodes = []
        for block in self.blocks_of(mask):
            v = self.td2_choice(block)
            nodes.append(CertNode(set_of(block), v, self.td2_forest(block & ~(1 << v))))
        return tuple(nodes)

    def tds_forest(self, mask: int, s: int) -> tuple[CertNode, ...]:
        s &= mask
        if not s:
            return ()
        nodes = []
        for comp in mask_components(self.adj, mask):
            if comp & s:
                v = self.tds_choice(comp, s & comp)
                bit = 1 << v
                nodes.append(CertNode(set_of(comp), v, self.tds_forest(comp & ~bit, s & ~bit)))
        return tuple(nodes)


def treedepth(graph: Graph, apex_rule: bool = True) -> tuple[int, DepthCertificate]:
    solver = DepthSolver(graph, apex_rule)
    value = solver.td(graph.full_mask)
    return value, DepthCertificate("td", value, solver.td_forest(graph.full_mask))


def treedepth2(graph: Graph, apex_rule: bool = True) -> tuple[int, DepthCertificate]:
    solver = DepthSolver(graph, apex_rule)
    value = solver.td2(graph.full_mask)
    return value, DepthCertificate("td2", value, solver.td2_forest(graph.full_mask))


def treedepth_relative(graph: Graph, terminals: Iterable[int]) -> tuple[int, DepthCertificate]:
    """td(G,S); deletions may use any vertex of G, not only those of S."""
    members = check_vertex_set(graph, terminals)
    solver = DepthSolver(graph)
    s = mask_of(members)
    value = solver.tds(graph.full_mask, s)
    return value, DepthCertificate("tds", value, solver.tds_forest(graph.full_mask, s), members)


def elimination_set(graph: Graph, terminals: Iterable[int], sub_terminals: Iterable[int]) -> frozenset[int]:
    """A set X containing ``sub_terminals`` (S') with td(G,S) <= td(G,S') + td(G-X, S-X).

    Each round deletes, in every component still meeting S', one optimal
    vertex for td(C, S' ∩ C); rounds repeat until S' is used up, so there
    are exactly td(G,S') of them.
    """
    check_vertex_set(graph, terminals)
    members = check_vertex_set(graph, sub_terminals)
    solver = DepthSolver(graph)
    alive = graph.full_mask
    sp = mask_of(members)
    chosen = 0
    while sp:
        round_pick = 0
        for comp in mask_components(solver.adj, alive):
            if comp & sp:
                round_pick |= 1 << solver.tds_choice(comp, sp & comp)
        chosen |= round_pick
        alive &= ~round_pick
        sp &= ~round_pick
    return set_of(chosen)


# -- certificate replay ---------------------------------------------------

def _parts(graph: Graph, kind: str, mask: int, s: int) -> list[int]:
    adj = graph.masks
    if kind == "td":
        return mask_components(adj, mask)
    if kind == "td2":
        return mask_blocks_and_cuts(adj, mask)[0] if mask else []
    return [c for c in mask_components(adj, mask) if c & s]


def _replay(graph: Graph, kind: str, mask: int, s: int, nodes: Sequence[CertNode]) -> int | None:
    if kind == "tds":
        s &= mask
        if not s:
            return 0 if not nodes else None
    expected = sorted(_parts(graph, kind, mask, s))
    try:
        given = sorted(mask_of(node.vertices) for node in nodes)
    except (TypeError, ValueError):
        return None
    if given != expected:
        return None
    depth = 0
    for node in nodes:
        part = mask_of(node.vertices)
        if node.delete < 0 or not (part >> node.delete) & 1:
            return None
        bit = 1 << node.delete
        sub = _replay(graph, kind, part & ~bit, (s & part) & ~bit, node.children)
        if sub is None:
            return None
        depth = max(depth, sub + 1)
    return depth


def check_certificate(graph: Graph, cert: DepthCertificate) -> bool:
    """True iff replaying ``cert`` through its recursion gives ``cert.value``."""
    if cert.kind not in KINDS:
        return False
    s = 0
    if cert.kind == "tds":
        if cert.terminals is None or any(not 0 <= v < graph.n for v in cert.terminals):
            return False
        s = mask_of(cert.terminals)
    for node in _walk(cert.forest):
        if any(not isinstance(v, int) or not 0 <= v < graph.n for v in node.vertices):
            return False
    depth = _replay(graph, cert.kind, graph.full_mask, s, cert.forest)
    return depth is not None and depth == cert.value


def _walk(nodes: Sequence[CertNode]):
    for node in nodes:
        yield node
        yield from _walk(node.children)


def measure(graph: Graph, kind: str, terminals: Iterable[int] | None = None) -> tuple[int, DepthCertificate]:
    """Dispatch on ``kind`` in {td, td2, tds}."""
    if kind == "td":
        return treedepth(graph)
    if kind == "td2":
        return treedepth2(graph)
    if kind == "tds":
        return treedepth_relative(graph, terminals or ())
    raise InvalidInputError(f"unknown depth measure {kind!r}")
