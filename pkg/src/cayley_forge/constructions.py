"""The three counterexample families as (graph, subset) pairs.

* odd graphs with the sets of ``n``-subsets avoiding a fixed point,
* 3-valent Cayley graphs on dihedral groups and their cyclic covers,
* Cayley graphs on iterated ``Z2`` wreath products, built by the lifting
  construction in :func:`wreath_lift`.

Every builder re-verifies the majority and induced-degree claims before it
returns, so a returned :class:`CounterexampleInstance` is a checked fact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import PreconditionError, ResourceLimitError
from .graphs import (
    Bipartition,
    Graph,
    VertexSubset,
    bipartition,
    cayley_graph,
    colex_subsets,
    is_covering_map,
    lift_subset,
    max_degree_within,
    odd_graph,
)
from .groups import (
    DihedralGroup,
    FiniteGroup,
    WreathZ2Group,
    canonical_generating_set,
    generates,
    make_cyclic,
    make_dihedral,
    quotient,
    same_table,
    subgroup_generated,
    wreath_z2,
)

FAMILIES = ("odd", "dihedral", "dihedral_cover", "wreath")

# gray vertices of the 18-vertex picture, as (i, j) for a^i b^j
U18_EXPONENTS = ((0, 0), (2, 0), (3, 0), (5, 0), (6, 0),
                 (1, 1), (2, 1), (4, 1), (7, 1), (8, 1))
DIHEDRAL_CONNECTION = ((0, 1), (1, 1), (3, 1))  # b, ab, a^3 b
MAX_WREATH_LEVELS = 2


@dataclass(frozen=True)
class GroupContext:
    group: FiniteGroup
    connection_set: frozenset[int]


@dataclass
class CounterexampleInstance:
    graph: Graph
    subset: VertexSubset
    family: str
    provenance: dict
    group_context: GroupContext | None = None
    extras: dict = field(default_factory=dict)

    def check(self) -> int:
        """Assert the two defining invariants; returns the induced max degree."""
        if 2 * len(self.subset) <= self.graph.n:
            raise PreconditionError(
                f"{self.family}: subset of size {len(self.subset)} is not a majority "
                f"of {self.graph.n} vertices")
        top, _ = max_degree_within(self.graph, self.subset)
        if top > 1:
            raise PreconditionError(f"{self.family}: induced max degree {top} > 1")
        return top

    @property
    def ratio(self) -> Fraction:
        return Fraction(len(self.subset), self.graph.n)


def odd_counterexample(n: int) -> CounterexampleInstance:
    """Odd graph ``O_n`` with the ``n``-subsets avoiding the last point ``2n``."""
    graph = odd_graph(n)
    omega = 2 * n
    verts = colex_subsets(2 * n + 1, n)
    U = VertexSubset(graph.n, frozenset(i for i, c in enumerate(verts) if omega not in c))
    if len(U) != comb(2 * n, n):
        raise PreconditionError(f"|U| = {len(U)}, expected C({2 * n}, {n})")
    inst = CounterexampleInstance(graph, U, "odd", {"n": n})
    inst.check()
    return inst


def _dihedral_connection(D: DihedralGroup) -> frozenset[int]:
    return frozenset(D.element(i, j) for i, j in DIHEDRAL_CONNECTION)


def dihedral_counterexample() -> CounterexampleInstance:
    D = make_dihedral(9)
    S = _dihedral_connection(D)
    graph = cayley_graph(D, S)
    U = VertexSubset(graph.n, frozenset(D.element(i, j) for i, j in U18_EXPONENTS))
    inst = CounterexampleInstance(graph, U, "dihedral", {"m": 1}, GroupContext(D, S))
    inst.check()
    return inst


def dihedral_cover(m: int) -> CounterexampleInstance:
    """``Cay(D_{18m}, {b, ab, a^3 b})`` with the preimage of the 10-set under
    the projection ``D_{18m} -> D_{18}`` killing ``<a^9>``."""
    if m < 1:
        raise PreconditionError(f"cover index m must be >= 1, got {m}")
    base = dihedral_counterexample()
    if m == 1:
        return base
    D = make_dihedral(9 * m)
    S = _dihedral_connection(D)
    graph = cayley_graph(D, S)
    N = subgroup_generated(D, [D.element(9)])
    Q, phi = quotient(D, N)
    # cosets are indexed by least representative, which reproduces D18's encoding
    if not same_table(Q, base.group_context.group):
        raise PreconditionError("quotient by <a^9> does not match D18's encoding")
    ok, why = is_covering_map(graph, base.graph, phi.map)
    if not ok:
        raise PreconditionError(f"projection is not a covering map: {why}", why)
    U = lift_subset(graph, base.graph, phi.map, base.subset)
    inst = CounterexampleInstance(
        graph, U, "dihedral_cover", {"m": m}, GroupContext(D, S),
        extras={"normal_subgroup": sorted(N), "projection": phi,
                "base": base, "is_cover": ok})
    inst.check()
    return inst


def parity_classes(W: WreathZ2Group, base_sides: Bipartition) -> list[int]:
    """0/1 parity of every ``(a, g)``: even when ``|a|`` and ``g`` agree."""
    m = W.base.order
    return [(bin(x // m).count("1") + base_sides.side[x % m]) % 2 for x in range(W.order)]


def lifted_blocks(W: WreathZ2Group, H: VertexSubset, even: frozenset[int],
                  odd: frozenset[int]):
    """Yield ``(bits, H_bits)`` for every bit vector over the base group."""
    for bits in range(1 << W.base.order):
        if bits == 0:
            yield bits, H.members
        elif bits & (bits - 1) == 0:
            g = bits.bit_length() - 1
            yield bits, odd if g in even else even
        else:
            yield bits, even


def wreath_lift(G: FiniteGroup, S, H: VertexSubset):
    """Lift a majority set of induced max degree <= 1 from ``Cay(G, S)`` to
    ``Cay(Z2 wr G, canonical set)``.

    Returns ``(W, S_hat, H_hat, info)``; ``info`` records the checks made.
    """
    S = frozenset(S)
    graph = cayley_graph(G, S)
    if not generates(G, S):
        raise PreconditionError("hypothesis failed: Cay(G, S) is not connected", sorted(S))
    sides = bipartition(graph)
    if not sides:
        raise PreconditionError("hypothesis failed: Cay(G, S) is not bipartite",
                                sides.odd_cycle)
    if H.graph_n != G.order:
        raise PreconditionError("hypothesis failed: H is not a subset of G")
    if 2 * len(H) <= G.order:
        raise PreconditionError(
            f"hypothesis failed: |H| = {len(H)} is not more than |G|/2 = {G.order / 2}")
    top, _ = max_degree_within(graph, H)
    if top > 1:
        raise PreconditionError(f"hypothesis failed: H induces max degree {top} > 1")

    W = wreath_z2(G)
    S_hat = canonical_generating_set(G, S, W)
    even, odd = sides.even(), sides.odd()
    members = set()
    block_sizes = {}
    for bits, block in lifted_blocks(W, H, even, odd):
        members.update(W.pack(bits, h) for h in block)
        block_sizes[bits] = len(block)
    lifted_graph = cayley_graph(W, S_hat)
    H_hat = VertexSubset(W.order, frozenset(members))

    parity = parity_classes(W, sides)
    for u, v in lifted_graph.edges():
        if parity[u] == parity[v]:
            raise PreconditionError(
                f"parity classes fail to separate edge {(u, v)}", (u, v))
    expected = len(H) + ((1 << G.order) - 1) * (G.order // 2)
    if len(H_hat) != expected or 2 * len(H_hat) <= W.order:
        raise PreconditionError(f"lifted set has size {len(H_hat)}, expected {expected}")
    lifted_top, _ = max_degree_within(lifted_graph, H_hat)
    if lifted_top > 1:
        raise PreconditionError(f"lifted set induces max degree {lifted_top}")
    info = {"graph": lifted_graph, "base_graph": graph, "base_bipartition": sides,
            "parity": parity, "block_sizes": block_sizes, "expected_size": expected}
    return W, S_hat, H_hat, info


def iterate_wreath(levels: int) -> list[CounterexampleInstance]:
    """Start from ``(Z2, {1})`` with both vertices and lift ``levels`` times."""
    if levels < 0:
        raise PreconditionError(f"levels must be >= 0, got {levels}")
    if levels > MAX_WREATH_LEVELS:
        raise ResourceLimitError(
            f"level {levels} is out of reach: level 3 would be Z2 wr G with |G| = 2048, "
            f"i.e. 2^2048 * 2048 vertices")
    G = make_cyclic(2)
    S = frozenset({1})
    H = VertexSubset.full(2)
    graph = cayley_graph(G, S)
    out = [CounterexampleInstance(graph, H, "wreath", {"levels": 0}, GroupContext(G, S))]
    out[0].check()
    for level in range(1, levels + 1):
        G, S, H, info = wreath_lift(G, S, H)
        inst = CounterexampleInstance(info["graph"], H, "wreath", {"levels": level},
                                      GroupContext(G, S), extras=info)
        inst.check()
        out.append(inst)
    return out
