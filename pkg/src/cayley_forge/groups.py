"""Concrete finite groups on dense integer indices.

Every group enumerates its elements as ``0 .. order-1`` with index 0 the
identity.  Multiplication is computed from a structured encoding per family
(cyclic, dihedral, wreath, quotient) rather than from a stored table, so
memory stays linear in the order.  :meth:`FiniteGroup.table` materialises a
Cayley table on request for small groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InvalidParameterError, PreconditionError, ResourceLimitError

TABLE_CAP = 4096
WREATH_BASE_CAP = 11


class FiniteGroup:
    """A finite group with elements ``0..order-1`` and identity ``0``."""

    name = "group"
    order: int

    def mul(self, g: int, h: int) -> int:
        raise NotImplementedError

    def inv(self, g: int) -> int:
        raise NotImplementedError

    def label(self, g: int) -> str:
        return str(g)

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def power(self, g: int, e: int) -> int:
        if e < 0:
            g, e = self.inv(g), -e
        result = 0
        while e:
            if e & 1:
                result = self.mul(result, g)
            g = self.mul(g, g)
            e >>= 1
        return result

    def is_involution(self, g: int) -> bool:
        return g != 0 and self.mul(g, g) == 0

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.mul(g, h) == self.mul(h, g)
                   for g in self.elements() for h in range(g + 1, self.order))

    def table(self) -> np.ndarray:
        """Full multiplication table as an ``(order, order)`` int array."""
        cached = getattr(self, "_table", None)
        if cached is not None:
            return cached
        if self.order > TABLE_CAP:
            raise ResourceLimitError(
                f"refusing to tabulate a group of order {self.order} > {TABLE_CAP}")
        t = np.empty((self.order, self.order), dtype=np.int64)
        for g in self.elements():
            for h in self.elements():
                t[g, h] = self.mul(g, h)
        t.setflags(write=False)
        self._table = t
        return t

    def check_axioms(self, samples: int | None = None, seed: int = 0) -> None:
        """Check identity, inverse and associativity laws.

        Associativity is exhaustive when ``samples`` is None, otherwise it is
        checked on ``samples`` random triples.  Raises PreconditionError with
        the offending triple.
        """
        for g in self.elements():
            if self.mul(0, g) != g or self.mul(g, 0) != g:
                raise PreconditionError(f"identity law fails at {g}", g)
            if self.mul(g, self.inv(g)) != 0 or self.mul(self.inv(g), g) != 0:
                raise PreconditionError(f"inverse law fails at {g}", g)
        if samples is None:
            triples = ((a, b, c) for a in self.elements()
                       for b in self.elements() for c in self.elements())
        else:
            rng = np.random.default_rng(seed)
            triples = (tuple(int(v) for v in rng.integers(0, self.order, 3))
                       for _ in range(samples))
        for a, b, c in triples:
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise PreconditionError(f"associativity fails at {(a, b, c)}", (a, b, c))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class CyclicGroup(FiniteGroup):
    def __init__(self, n: int):
        self.n = self.order = n
        self.name = f"Z{n}"

    def mul(self, g, h):
        return (g + h) % self.n

    def inv(self, g):
        return (self.n - g) % self.n


class DihedralGroup(FiniteGroup):
    """``<a, b | a^n = b^2 = (ab)^2 = 1>`` of order ``2n``.

    The element ``a^i b^j`` has index ``i + n*j``.
    """

    def __init__(self, n: int):
        self.n = n
        self.order = 2 * n
        self.name = f"D{2 * n}"

    def element(self, i: int, j: int = 0) -> int:
        return i % self.n + self.n * (j % 2)

    def decompose(self, g: int) -> tuple[int, int]:
        return g % self.n, g // self.n

    def mul(self, g, h):
        n = self.n
        i, j = g % n, g // n
        k, l = h % n, h // n
        return (i - k if j else i + k) % n + n * (j ^ l)

    def inv(self, g):
        i, j = g % self.n, g // self.n
        return g if j else (-i) % self.n

    def label(self, g):
        i, j = self.decompose(g)
        rot = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        if j:
            return f"{rot} b" if rot else "b"
        return rot or "1"


class WreathZ2Group(FiniteGroup):
    """The wreath product ``Z2 wr G`` of pairs ``(bits, g)``.

    ``bits`` is a function ``G -> Z2`` stored as an integer whose bit ``x``
    is the value at base element ``x``.  The pair has index
    ``bits * |G| + g`` and multiplies as ``(a, g)(b, h) = (a ^ b^g, gh)``
    where ``b^g(x) = b(g^-1 x)``.
    """

    def __init__(self, base: FiniteGroup):
        if base.order > WREATH_BASE_CAP:
            raise ResourceLimitError(
                f"wreath base order {base.order} exceeds cap {WREATH_BASE_CAP}: "
                f"Z2 wr G would have 2^{base.order} * {base.order} elements")
        self.base = base
        m = base.order
        self.order = (1 << m) * m
        self.name = f"Z2wr({base.name})"
        self._act: dict[int, list[int]] = {}
        # left-multiplication permutations of the base, used by the action
        self._lmul = [[base.mul(g, y) for y in range(m)] for g in range(m)]

    def pack(self, bits: int, top: int) -> int:
        return bits * self.base.order + top

    def unpack(self, x: int) -> tuple[int, int]:
        return divmod(x, self.base.order)

    def act(self, bits: int, g: int) -> int:
        """Return ``bits^g``: the value at ``y`` moves to ``g y``."""
        table = self._act.get(g)
        if table is None:
            perm = self._lmul[g]
            table = []
            for mask in range(1 << self.base.order):
                out = 0
                y = 0
                while mask:
                    if mask & 1:
                        out |= 1 << perm[y]
                    mask >>= 1
                    y += 1
                table.append(out)
            self._act[g] = table
        return table[bits]

    def mul(self, x, y):
        m = self.base.order
        a, g = divmod(x, m)
        b, h = divmod(y, m)
        return (a ^ self.act(b, g)) * m + self.base.mul(g, h)

    def inv(self, x):
        a, g = divmod(x, self.base.order)
        gi = self.base.inv(g)
        return self.act(a, gi) * self.base.order + gi

    def delta(self, g: int) -> int:
        """Index of ``(a_g, 1)`` where ``a_g`` is the indicator of ``g``."""
        return self.pack(1 << g, 0)

    def label(self, x):
        a, g = self.unpack(x)
        bits = "".join("1" if a >> y & 1 else "0" for y in range(self.base.order))
        return f"({bits}, {self.base.label(g)})"


class QuotientGroup(FiniteGroup):
    """``G/N`` with cosets indexed in order of their smallest element."""

    def __init__(self, parent: FiniteGroup, normal: frozenset[int]):
        self.parent = parent
        self.normal = normal
        coset_of = [-1] * parent.order
        reps = []
        for g in parent.elements():
            if coset_of[g] >= 0:
                continue
            idx = len(reps)
            reps.append(g)
            for n in normal:
                coset_of[parent.mul(g, n)] = idx
        self.reps = reps
        self.coset_of = coset_of
        self.order = len(reps)
        self.name = f"{parent.name}/N{len(normal)}"

    def mul(self, g, h):
        return self.coset_of[self.parent.mul(self.reps[g], self.reps[h])]

    def inv(self, g):
        return self.coset_of[self.parent.inv(self.reps[g])]

    def label(self, g):
        return f"[{self.parent.label(self.reps[g])}]"


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by its values on every source element."""

    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.map[g]

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    def check(self) -> None:
        """Exhaustively check the homomorphism law; raises with a witness pair."""
        if self.map[0] != 0:
            raise PreconditionError("identity is not mapped to identity", 0)
        src, tgt = self.source, self.target
        for g in src.elements():
            for h in src.elements():
                if self.map[src.mul(g, h)] != tgt.mul(self.map[g], self.map[h]):
                    raise PreconditionError(f"hom law fails at {(g, h)}", (g, h))


def make_cyclic(n: int) -> CyclicGroup:
    if n < 1:
        raise InvalidParameterError(f"cyclic group needs n >= 1, got {n}")
    return CyclicGroup(n)


def make_dihedral(n: int) -> DihedralGroup:
    if n < 1:
        raise InvalidParameterError(f"dihedral group needs n >= 1, got {n}")
    return DihedralGroup(n)


def wreath_z2(base: FiniteGroup) -> WreathZ2Group:
    return WreathZ2Group(base)


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    gens = [g for g in gens]
    gens += [G.inv(g) for g in gens]
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = G.mul(x, s)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def generates(G: FiniteGroup, gens: Iterable[int]) -> bool:
    return len(subgroup_generated(G, gens)) == G.order


def check_connection_set(G: FiniteGroup, S: Iterable[int]) -> frozenset[int]:
    """Validate that ``S`` is identity-free and inverse-closed."""
    S = frozenset(S)
    for s in sorted(S):
        if not 0 <= s < G.order:
            raise PreconditionError(f"{s} is not an element of {G.name}", s)
        if s == 0:
            raise PreconditionError("connection set contains the identity", s)
        if G.inv(s) not in S:
            raise PreconditionError(
                f"connection set is not inverse-closed: {G.label(s)} lacks its inverse", s)
    return S


def canonical_generating_set(base: FiniteGroup, S: Iterable[int],
                             wreath: WreathZ2Group | None = None) -> frozenset[int]:
    """``{(a_1, 1)} | {(e, s) : s in S}`` inside ``Z2 wr base``."""
    S = check_connection_set(base, S)
    if not generates(base, S):
        raise PreconditionError(f"connection set does not generate {base.name}", sorted(S))
    W = wreath if wreath is not None else wreath_z2(base)
    return frozenset({W.delta(0)} | {W.pack(0, s) for s in S})


def quotient(G: FiniteGroup, N: Iterable[int]) -> tuple[QuotientGroup, GroupHom]:
    N = frozenset(N)
    if 0 not in N:
        raise PreconditionError("N does not contain the identity", 0)
    for g in N:
        for h in N:
            if G.mul(g, G.inv(h)) not in N:
                raise PreconditionError("N is not closed under g h^-1", (g, h))
    for g in G.elements():
        gi = G.inv(g)
        for n in N:
            if G.mul(G.mul(g, n), gi) not in N:
                raise PreconditionError(
                    f"N is not normal: {G.label(g)} conjugates {G.label(n)} outside N", (g, n))
    Q = QuotientGroup(G, N)
    return Q, GroupHom(G, Q, tuple(Q.coset_of))


def same_table(G: FiniteGroup, H: FiniteGroup) -> bool:
    """True when both groups have identical multiplication on indices."""
    return G.order == H.order and all(
        G.mul(g, h) == H.mul(g, h) for g in G.elements() for h in G.elements())

