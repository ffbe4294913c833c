"""Maximum vertex subsets whose induced subgraph has max degree <= k.

:func:`max_bounded_degree_subset` is an exact branch and bound; the
:func:`brute_force_oracle` enumerates all ``2^n`` subsets and shares no code
with it.  :func:`census_dihedral` sweeps small dihedral Cayley graphs for
majority sets sitting below the ``sqrt(x + x'/2)`` threshold.
"""

from __future__ import annotations

import math
import multiprocessing as mp
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .errors import PreconditionError, ResourceLimitError
from .graphs import Graph, VertexSubset, cayley_graph
from .groups import DihedralGroup, make_dihedral
from .verify import below_pt_threshold, potechin_tsang_threshold

EXACT_CAP = 10**4
ORACLE_CAP = 24
PROGRESS_EVERY = 4096

UND, IN, OUT = 0, 1, -1


@dataclass
class SearchResult:
    best_size: int
    witness: VertexSubset
    nodes_explored: int
    proven_optimal: bool
    mode: str = "exact"

    def to_dict(self) -> dict:
        return {"best_size": self.best_size, "witness": self.witness.sorted(),
                "nodes_explored": self.nodes_explored,
                "proven_optimal": self.proven_optimal, "mode": self.mode}


def branch_order(graph: Graph) -> list[int]:
    """Vertices by descending degree, ties broken by index."""
    return sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))


def counting_bound(graph: Graph, k: int) -> int:
    """Upper bound from ``sum_{v in X} (deg v - k) <= e(X, V - X)``.

    For a d-regular graph this is ``floor(d n / (2d - k))``.
    """
    degs = graph.degrees()
    wmin = min((2 * d - k for d in degs), default=0)
    if wmin <= 0:
        return graph.n
    return min(graph.n, sum(degs) // wmin)


class _Solver:
    """Include-first depth-first branch and bound with an undo trail."""

    def __init__(self, graph: Graph, k: int, order: list[int]):
        self.adj = graph.adjacency
        self.n = graph.n
        self.k = k
        self.order = order
        self.deg = graph.degrees()
        self.wmin = min((2 * d - k for d in self.deg), default=0)
        self.status = [UND] * self.n
        self.indeg = [0] * self.n
        self.excl_nbrs = [0] * self.n
        self.n_in = 0
        self.n_und = self.n
        self.sum_deg_und = sum(self.deg)
        self.sum_in_term = 0
        self.c_excl = 0
        self.trail: list[int] = []
        self.best = -1
        self.best_mask: int | None = None
        self.nodes = 0

    def include(self, v):
        self.status[v] = IN
        self.n_in += 1
        self.n_und -= 1
        self.sum_deg_und -= self.deg[v]
        self.sum_in_term += self.deg[v] - self.k
        for u in self.adj[v]:
            self.indeg[u] += 1
        self.trail.append(v)

    def exclude(self, v):
        self.status[v] = OUT
        self.n_und -= 1
        self.sum_deg_und -= self.deg[v]
        self.c_excl += self.deg[v] - self.excl_nbrs[v]
        for u in self.adj[v]:
            self.excl_nbrs[u] += 1
            if self.status[u] == OUT:
                self.c_excl -= 1
        self.trail.append(~v)

    def undo(self, mark):
        trail = self.trail
        while len(trail) > mark:
            t = trail.pop()
            if t >= 0:
                v = t
                self.status[v] = UND
                self.n_in -= 1
                self.n_und += 1
                self.sum_deg_und += self.deg[v]
                self.sum_in_term -= self.deg[v] - self.k
                for u in self.adj[v]:
                    self.indeg[u] -= 1
            else:
                v = ~t
                for u in self.adj[v]:
                    self.excl_nbrs[u] -= 1
                    if self.status[u] == OUT:
                        self.c_excl += 1
                self.status[v] = UND
                self.n_und += 1
                self.sum_deg_und += self.deg[v]
                self.c_excl -= self.deg[v] - self.excl_nbrs[v]

    def can_include(self, v):
        if self.indeg[v] > self.k:
            return False
        return all(self.indeg[u] < self.k for u in self.adj[v] if self.status[u] == IN)

    def include_and_propagate(self, v):
        self.include(v)
        k, status, indeg, adj = self.k, self.status, self.indeg, self.adj
        for w in (v, *[u for u in adj[v] if status[u] == IN]):
            if indeg[w] == k:
                for z in adj[w]:
                    if status[z] == UND:
                        self.exclude(z)
        for u in adj[v]:
            if status[u] == UND and indeg[u] > k:
                self.exclude(u)

    def upper_bound(self):
        bound = self.n_in + self.n_und
        if self.wmin > 0:
            budget = self.c_excl + self.sum_deg_und - self.sum_in_term
            bound = min(bound, self.n_in + budget // self.wmin)
        return bound

    def current_mask(self):
        return sum(1 << v for v in range(self.n) if self.status[v] == IN)

    def apply_prefix(self, prefix):
        """Replay ``(vertex, include)`` decisions; False if one is infeasible."""
        for v, take in prefix:
            if self.status[v] != UND:
                return False
            if take:
                if not self.can_include(v):
                    return False
                self.include_and_propagate(v)
            else:
                self.exclude(v)
        return True

    def run(self, stop_at: int, node_limit: int | None = None,
            shared=None, progress: Callable | None = None) -> bool:
        """Search below the current state; returns False if the node limit hit."""
        order, status, n = self.order, self.status, self.n
        stack = []
        ptr = 0
        descend = True
        while True:
            if descend:
                self.nodes += 1
                if node_limit is not None and self.nodes > node_limit:
                    return False
                if self.nodes % PROGRESS_EVERY == 0:
                    if shared is not None:
                        with shared.get_lock():
                            if shared.value > self.best:
                                self.best = shared.value
                            else:
                                shared.value = self.best
                    if progress is not None:
                        progress(self.nodes, self.best)
                while ptr < n and status[order[ptr]] != UND:
                    ptr += 1
                if ptr == n:
                    if self.n_in > self.best:
                        self.best = self.n_in
                        self.best_mask = self.current_mask()
                        if shared is not None:
                            with shared.get_lock():
                                shared.value = max(shared.value, self.best)
                        if self.best >= stop_at:
                            return True
                    descend = False
                    continue
                if self.upper_bound() <= self.best:
                    descend = False
                    continue
                v = order[ptr]
                mark = len(self.trail)
                if self.can_include(v):
                    self.include_and_propagate(v)
                    stack.append((v, ptr, mark, 0))
                else:
                    self.exclude(v)
                    stack.append((v, ptr, mark, 1))
            else:
                if not stack:
                    return True
                v, p, mark, branch = stack.pop()
                self.undo(mark)
                if branch == 0:
                    self.exclude(v)
                    stack.append((v, p, mark, 1))
                    ptr = p
                    descend = True


def _mask_to_subset(n: int, mask: int) -> VertexSubset:
    return VertexSubset(n, frozenset(v for v in range(n) if mask >> v & 1))


def is_feasible(graph: Graph, members, k: int) -> bool:
    members = set(members)
    return all(sum(1 for u in graph.adjacency[v] if u in members) <= k for v in members)


def heuristic_subset(graph: Graph, k: int, restarts: int = 8, seed: int = 0,
                     swap_rounds: int = 20) -> set[int]:
    """Greedy insertion followed by one-out/one-in plateau swaps.

    Deterministic for a fixed ``seed``.  No optimality claim is made.
    """
    rng = random.Random(seed)
    adj = graph.adjacency
    best: set[int] = set()
    for attempt in range(restarts):
        order = sorted(range(graph.n), key=lambda v: (graph.degree(v), rng.random() if attempt else v))
        X: set[int] = set()
        indeg = [0] * graph.n

        def addable(v):
            return (v not in X and indeg[v] <= k
                    and all(indeg[u] < k for u in adj[v] if u in X))

        def add(v):
            X.add(v)
            for u in adj[v]:
                indeg[u] += 1

        def remove(v):
            X.discard(v)
            for u in adj[v]:
                indeg[u] -= 1

        for v in order:
            if addable(v):
                add(v)
        for _ in range(swap_rounds):
            improved = False
            outside = [v for v in range(graph.n) if v not in X]
            rng.shuffle(outside)
            for v in outside:
                if v in X:
                    continue
                if addable(v):
                    add(v)
                    improved = True
                    continue
                for u in [u for u in adj[v] if u in X]:
                    remove(u)
                    if addable(v):
                        add(v)
                        gained = [w for w in adj[u] if addable(w)]
                        for w in gained:
                            if addable(w):
                                add(w)
                                improved = True
                        break
                    add(u)
            if not improved:
                break
        if len(X) > len(best):
            best = set(X)
    return best


_SHARED = None


def _init_worker(shared):
    global _SHARED
    _SHARED = shared


def _solve_prefix(args):
    graph, k, order, prefix, stop_at, node_limit, start_best = args
    solver = _Solver(graph, k, order)
    solver.best = max(start_best, _SHARED.value)
    if not solver.apply_prefix(prefix):
        return None, solver.nodes, True
    finished = solver.run(stop_at, node_limit, shared=_SHARED)
    return solver.best_mask, solver.nodes, finished


def _prefixes(order, depth):
    for bits in range(1 << depth):
        # include-first ordering: bit value 0 means include
        yield [(order[i], not (bits >> (depth - 1 - i)) & 1) for i in range(depth)]


def max_bounded_degree_subset(graph: Graph, k: int = 1, exact: bool = True,
                              threads: int = 1, node_limit: int | None = None,
                              progress: Callable[[int, int], None] | None = None
                              ) -> SearchResult:
    """Largest ``X`` with every vertex of ``X`` having at most ``k`` neighbours in ``X``.

    In exact mode the search is an include-first branch and bound over
    :func:`branch_order`; the witness is the first optimum met in that order
    when ``threads == 1``.  Graphs above ``EXACT_CAP`` vertices, or
    ``exact=False``, use :func:`heuristic_subset` and report
    ``proven_optimal=False``.  Hitting ``node_limit`` also returns the
    incumbent with ``proven_optimal=False``.
    """
    if k < 0:
        raise PreconditionError(f"degree cap must be >= 0, got {k}")
    n = graph.n
    if n == 0:
        return SearchResult(0, VertexSubset(0), 0, True)
    seed_set = heuristic_subset(graph, k, restarts=4 if exact else 8)
    if not exact or n > EXACT_CAP:
        return SearchResult(len(seed_set), VertexSubset(n, frozenset(seed_set)), 0, False,
                            mode="heuristic")

    order = branch_order(graph)
    stop_at = counting_bound(graph, k)
    # one below the heuristic size: the tree still reaches the first optimum
    # in branch order, so the witness does not depend on the heuristic
    start_best = len(seed_set) - 1
    if threads <= 1:
        solver = _Solver(graph, k, order)
        solver.best = start_best
        finished = solver.run(stop_at, node_limit, progress=progress)
        masks, nodes = [solver.best_mask], solver.nodes
    else:
        depth = min(n, max(1, math.ceil(math.log2(threads * 4))))
        shared = mp.Value("i", start_best)
        jobs = [(graph, k, order, p, stop_at, node_limit, start_best)
                for p in _prefixes(order, depth)]
        with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(shared,)) as pool:
            results = list(pool.map(_solve_prefix, jobs))
        masks = [m for m, _, _ in results]
        nodes = sum(c for _, c, _ in results)
        finished = all(f for _, _, f in results)

    best_mask, best_size = None, -1
    for m in masks:
        if m is not None and bin(m).count("1") > best_size:
            best_mask, best_size = m, bin(m).count("1")
    if best_mask is None or best_size < len(seed_set):
        witness = VertexSubset(n, frozenset(seed_set))
    else:
        witness = _mask_to_subset(n, best_mask)
    return SearchResult(len(witness), witness, nodes, finished)


def brute_force_oracle(graph: Graph, k: int = 1) -> SearchResult:
    """Exhaustive check of all ``2^n`` subsets; returns the smallest-integer
    mask among the optimal ones."""
    n = graph.n
    if n > ORACLE_CAP:
        raise ResourceLimitError(f"brute force oracle limited to n <= {ORACLE_CAP}, got {n}")
    rows = [np.uint64(sum(1 << u for u in nb)) for nb in graph.adjacency]
    best, best_mask = -1, 0
    chunk = 1 << 20
    for start in range(0, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint64)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(n):
            member = (masks >> np.uint64(v)) & np.uint64(1)
            deg = np.bitwise_count(masks & rows[v])
            ok &= ~((member == 1) & (deg > k))
        sizes = np.where(ok, np.bitwise_count(masks).astype(np.int64), -1)
        i = int(np.argmax(sizes))
        if sizes[i] > best:
            best, best_mask = int(sizes[i]), int(masks[i])
    return SearchResult(best, _mask_to_subset(n, best_mask), 1 << n, True, mode="oracle")


def majority_min_max_degree(graph: Graph) -> tuple[int, VertexSubset]:
    """Minimum, over all sets of ``floor(n/2) + 1`` vertices, of the induced
    max degree, with a set attaining it.

    Larger sets cannot do better since induced max degree is monotone, so
    this is the minimum over all majority sets.
    """
    if graph.n > 24:
        raise ResourceLimitError("majority enumeration limited to n <= 24")
    rows = graph.masks()
    size = graph.n // 2 + 1
    best, best_set = None, None
    for combo in combinations(range(graph.n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        top = max(bin(rows[v] & mask).count("1") for v in combo)
        if best is None or top < best:
            best, best_set = top, combo
    return best, VertexSubset(graph.n, frozenset(best_set))


def dihedral_automorphism(D: DihedralGroup, u: int, v: int):
    """``a^i -> a^{u i}``, ``a^i b -> a^{u i + v} b``."""
    def phi(g):
        i, j = D.decompose(g)
        return D.element(u * i + (v if j else 0), j)
    return phi


def connection_sets(D: DihedralGroup, size: int):
    """All inverse-closed, identity-free subsets of ``D`` with ``size`` elements."""
    atoms = []
    for g in range(1, D.order):
        gi = D.inv(g)
        if g <= gi:
            atoms.append(frozenset({g, gi}))
    for r in range(1, size + 1):
        for combo in combinations(atoms, r):
            S = frozenset().union(*combo)
            if len(S) == size:
                yield S


def canonical_connection_set(D: DihedralGroup, S) -> tuple[tuple[int, ...], int]:
    """Least sorted image of ``S`` under ``a -> a^u``, ``b -> a^v b``, with orbit size."""
    n = D.n
    units = [u for u in range(1, n + 1) if math.gcd(u, n) == 1]
    images = set()
    for u in units:
        for v in range(n):
            phi = dihedral_automorphism(D, u, v)
            images.add(tuple(sorted(phi(s) for s in S)))
    return min(images), len(images)


def census_dihedral(max_half_order: int, connection_size: int,
                    min_half_order: int = 1, node_limit: int | None = None) -> list[dict]:
    """Dihedral Cayley graphs ``Cay(D_2n, S)`` with ``|S| = connection_size``
    that carry a majority set of induced max degree ``k`` with
    ``k < sqrt(x + x'/2)``.

    Connection sets are taken up to the automorphisms ``a -> a^u``,
    ``b -> a^v b``.  Each entry holds the representative, its orbit size,
    ``(x, x')``, the smallest working ``k`` and the search result.
    """
    if connection_size < 1:
        raise PreconditionError("connection_size must be >= 1")
    if 2 * max_half_order > EXACT_CAP:
        raise ResourceLimitError("census order exceeds the exact search cap")
    found = []
    for n in range(max(1, min_half_order), max_half_order + 1):
        D = make_dihedral(n)
        reps = {}
        for S in connection_sets(D, connection_size):
            rep, orbit = canonical_connection_set(D, S)
            reps.setdefault(rep, orbit)
        for rep in sorted(reps):
            x, xp = potechin_tsang_threshold(D, rep)
            graph = cayley_graph(D, rep)
            k = 0
            while below_pt_threshold(k, x, xp):
                result = max_bounded_degree_subset(graph, k, node_limit=node_limit)
                if 2 * result.best_size > graph.n:
                    found.append({"n": n, "connection_set": list(rep),
                                  "labels": [D.label(s) for s in rep],
                                  "orbit_size": reps[rep], "x": x, "x_prime": xp,
                                  "k": k, "result": result})
                    break
                k += 1
    return found
