"""Simple undirected graphs, the builders used by the constructions, and the
structural checks they rely on (induced degrees, 2-colouring, covers)."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import PreconditionError, ResourceLimitError
from .groups import FiniteGroup, check_connection_set

DEFAULT_MAX_VERTICES = 10**6
MAX_TOTAL_DEGREE = 10**7
BITSET_CACHE_CAP = 65536


def max_vertices() -> int:
    """Vertex cap, overridable with ``CAYLEY_FORGE_MAX_VERTICES``."""
    raw = os.environ.get("CAYLEY_FORGE_MAX_VERTICES")
    return int(raw) if raw else DEFAULT_MAX_VERTICES


def _check_size(n: int, total_degree: int = 0) -> None:
    cap = max_vertices()
    if n > cap:
        raise ResourceLimitError(f"{n} vertices exceeds the vertex cap {cap}")
    if total_degree > MAX_TOTAL_DEGREE:
        raise ResourceLimitError(
            f"total degree {total_degree} exceeds the cap {MAX_TOTAL_DEGREE}")


class Graph:
    """Simple undirected graph on ``0..n-1`` stored as sorted neighbour tuples."""

    def __init__(self, adjacency: Sequence[Iterable[int]], labels: Sequence[str] | None = None):
        self.adjacency = tuple(tuple(sorted(set(nb))) for nb in adjacency)
        self.n = len(self.adjacency)
        if labels is not None and len(labels) != self.n:
            raise PreconditionError("label count does not match vertex count")
        self.labels = tuple(labels) if labels is not None else None
        self._masks = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {(u, v)} out of range", (u, v))
            if u == v:
                raise PreconditionError(f"self-loop at {u}", u)
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj, labels)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def regular_valency(self) -> int | None:
        """Common degree when the graph is regular, else None."""
        if self.n == 0:
            return None
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def masks(self) -> list[int]:
        """Neighbourhoods as integer bitsets (cached, n <= 65536)."""
        if self._masks is None:
            if self.n > BITSET_CACHE_CAP:
                raise ResourceLimitError(f"bitset rows need n <= {BITSET_CACHE_CAP}")
            self._masks = [sum(1 << u for u in nb) for nb in self.adjacency]
        return self._masks

    def check(self) -> None:
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if v == u:
                    raise PreconditionError(f"self-loop at {u}", u)
                if u not in self.adjacency[v]:
                    raise PreconditionError(f"asymmetric edge {(u, v)}", (u, v))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self):
        return hash(self.adjacency)

    def __repr__(self):
        return f"<Graph n={self.n} m={self.num_edges()}>"


@dataclass(frozen=True)
class VertexSubset:
    graph_n: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(self.members)
        bad = [v for v in members if not 0 <= v < self.graph_n]
        if bad:
            raise PreconditionError(f"vertices {sorted(bad)[:5]} outside 0..{self.graph_n - 1}", bad)
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, n: int) -> "VertexSubset":
        return cls(n, frozenset(range(n)))

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in self.members

    def __iter__(self):
        return iter(sorted(self.members))


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-colouring; ``side[v]`` is 0 for even and 1 for odd."""

    side: tuple[int, ...]

    def even(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s == 0)

    def odd(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s == 1)


@dataclass(frozen=True)
class NotBipartite:
    """Failure result of :func:`bipartition`, carrying an odd closed walk."""

    odd_cycle: tuple[int, ...]

    def __bool__(self):
        return False


def cayley_graph(G: FiniteGroup, S: Iterable[int]) -> Graph:
    """``Cay(G, S)``: ``g ~ h`` iff ``g^-1 h`` lies in ``S``."""
    S = sorted(check_connection_set(G, S))
    _check_size(G.order, G.order * len(S))
    adj = [[G.mul(g, s) for s in S] for g in G.elements()]
    return Graph(adj, [G.label(g) for g in G.elements()])


def colex_subsets(ground: int, k: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(ground), k), key=lambda c: c[::-1])


def odd_graph(n: int) -> Graph:
    """Odd graph: ``n``-subsets of ``{0..2n}`` in colex order, adjacent when disjoint."""
    if n < 1:
        raise PreconditionError(f"odd graph needs n >= 1, got {n}")
    nv = comb(2 * n + 1, n)
    _check_size(nv, nv * (n + 1))
    verts = colex_subsets(2 * n + 1, n)
    masks = [sum(1 << i for i in c) for c in verts]
    index = {m: i for i, m in enumerate(masks)}
    full = (1 << (2 * n + 1)) - 1
    adj = []
    for m in masks:
        # disjoint n-subsets are the n-subsets of the (n+1)-element complement
        comp = full & ~m
        adj.append([index[comp & ~(1 << i)] for i in range(2 * n + 1) if comp >> i & 1])
    labels = ["{" + ",".join(map(str, c)) + "}" for c in verts]
    return Graph(adj, labels)


def hypercube(d: int) -> Graph:
    if d < 0:
        raise PreconditionError(f"hypercube dimension must be >= 0, got {d}")
    if d > 20:
        raise ResourceLimitError(f"hypercube dimension {d} exceeds 20")
    _check_size(1 << d, d << d)
    adj = [[v ^ (1 << i) for i in range(d)] for v in range(1 << d)]
    return Graph(adj, [format(v, f"0{d}b") if d else "" for v in range(1 << d)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def induced_degrees(graph: Graph, X: VertexSubset) -> dict[int, int]:
    if X.graph_n != graph.n:
        raise PreconditionError(
            f"subset is over {X.graph_n} vertices but the graph has {graph.n}")
    members = X.members
    return {v: sum(1 for u in graph.adjacency[v] if u in members) for v in members}


def max_degree_within(graph: Graph, X: VertexSubset) -> tuple[int, dict[int, int]]:
    """Largest degree of the subgraph induced by ``X`` (0 when ``X`` is empty),
    together with the induced degree of every member."""
    degs = induced_degrees(graph, X)
    return max(degs.values(), default=0), degs


def bipartition(graph: Graph) -> Bipartition | NotBipartite:
    """BFS 2-colouring; vertex 0 (and the least vertex of every other
    component) is coloured even."""
    side = [-1] * graph.n
    parent = [-1] * graph.n
    for root in range(graph.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    queue.append(v)
                elif side[v] == side[u]:
                    return NotBipartite(_odd_cycle(parent, u, v))
    return Bipartition(tuple(side))


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    pu, pv = [u], [v]
    while parent[pu[-1]] >= 0:
        pu.append(parent[pu[-1]])
    while parent[pv[-1]] >= 0:
        pv.append(parent[pv[-1]])
    # strip the common tail above the lowest common ancestor
    while len(pu) > 1 and len(pv) > 1 and pu[-2] == pv[-2]:
        pu.pop()
        pv.pop()
    return tuple(pu + pv[-2::-1])


def is_covering_map(cover: Graph, base: Graph, f: Sequence[int]) -> tuple[bool, str | None]:
    """Check that ``f`` is surjective and a bijection on every neighbourhood.

    Returns ``(ok, witness)`` where ``witness`` describes the first violation.
    """
    if len(f) != cover.n:
        return False, f"map has {len(f)} entries for {cover.n} vertices"
    for v, fv in enumerate(f):
        if not 0 <= fv < base.n:
            return False, f"vertex {v} maps to {fv}, outside the base graph"
    missing = set(range(base.n)) - set(f)
    if missing:
        return False, f"not surjective: base vertex {min(missing)} has no preimage"
    for v in range(cover.n):
        image = [f[u] for u in cover.adjacency[v]]
        if sorted(image) != list(base.adjacency[f[v]]):
            return False, (f"neighbourhood of {v} maps to {sorted(image)}, "
                           f"expected {list(base.adjacency[f[v]])}")
    return True, None


def fibers(base_n: int, f: Sequence[int]) -> list[list[int]]:
    out = [[] for _ in range(base_n)]
    for v, fv in enumerate(f):
        out[fv].append(v)
    return out


def lift_subset(cover: Graph, base: Graph, f: Sequence[int], X: VertexSubset) -> VertexSubset:
    """Preimage of ``X`` under a covering map ``f``."""
    ok, why = is_covering_map(cover, base, f)
    if not ok:
        raise PreconditionError(f"not a covering map: {why}", why)
    if X.graph_n != base.n:
        raise PreconditionError("subset does not belong to the base graph")
    return VertexSubset(cover.n, frozenset(v for v, fv in enumerate(f) if fv in X.members))


def is_automorphism(graph: Graph, perm: Sequence[int]) -> bool:
    edges = set(graph.edges())
    for u, v in edges:
        a, b = perm[u], perm[v]
        if (min(a, b), max(a, b)) not in edges:
            return False
    return sorted(perm) == list(range(graph.n))
