"""Certificates: exact comparison of a (graph, subset) pair against the
sqrt(d) hypercube threshold, the sqrt(x + x'/2) Cayley-graph threshold and
the d/(2d-1) cap for sets of induced max degree at most 1.

All comparisons are done on integers by squaring; no square roots are taken.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import InvalidParameterError, PreconditionError
from .graphs import Graph, VertexSubset, bipartition, max_degree_within
from .groups import FiniteGroup, check_connection_set


@dataclass(frozen=True)
class Certificate:
    n: int
    d: int | None
    subset_size: int
    ratio: tuple[int, int]
    induced_max_degree: int
    bipartite: bool
    x: int | None
    x_prime: int | None
    huang_below: bool | None
    is_pt_counterexample: bool
    bound_d_2d1: dict | None

    @property
    def ratio_fraction(self) -> Fraction:
        return Fraction(*self.ratio)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ratio"] = list(self.ratio)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        data = dict(data)
        data["ratio"] = tuple(data["ratio"])
        return cls(**data)


def potechin_tsang_threshold(G: FiniteGroup, S) -> tuple[int, int]:
    """``(x, x')``: involutions and non-involutions in the connection set."""
    S = check_connection_set(G, S)
    x = sum(1 for s in S if G.mul(s, s) == 0)
    return x, len(S) - x


def below_pt_threshold(max_degree: int, x: int, x_prime: int) -> bool:
    """``max_degree < sqrt(x + x'/2)``, compared as ``2 k^2 < 2x + x'``."""
    return 2 * max_degree * max_degree < 2 * x + x_prime


def degree_one_bound(d: int, n: int) -> int:
    """Largest possible ``|X|`` with induced max degree <= 1 in a d-regular
    graph on ``n`` vertices: ``floor(d n / (2d - 1))``."""
    if d < 1 or n < 1:
        raise InvalidParameterError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    return d * n // (2 * d - 1)


def verify_certificate(graph: Graph, X: VertexSubset, group_context=None) -> Certificate:
    """Compute every certificate field for ``X`` inside ``graph``.

    ``group_context`` is an optional ``(G, S)`` pair (or any object with
    ``group`` and ``connection_set`` attributes) saying the graph is
    ``Cay(G, S)``; without it the Cayley threshold is not evaluated and the
    counterexample predicate is False.
    """
    if X.graph_n != graph.n:
        raise PreconditionError(
            f"subset is over {X.graph_n} vertices but the graph has {graph.n}")
    top, _ = max_degree_within(graph, X)
    d = graph.regular_valency()
    ratio = Fraction(len(X), graph.n) if graph.n else Fraction(0)
    x = x_prime = None
    if group_context is not None:
        G, S = _unpack_context(group_context)
        if G.order != graph.n:
            raise PreconditionError(
                f"group of order {G.order} cannot label a graph on {graph.n} vertices")
        x, x_prime = potechin_tsang_threshold(G, S)
    is_pt = (d is not None and x is not None and ratio > Fraction(1, 2)
             and below_pt_threshold(top, x, x_prime))
    bound = None
    if d is not None and d >= 1:
        cap = degree_one_bound(d, graph.n)
        bound = {"cap": cap, "attained": top <= 1 and len(X) == cap}
    return Certificate(
        n=graph.n,
        d=d,
        subset_size=len(X),
        ratio=(ratio.numerator, ratio.denominator),
        induced_max_degree=top,
        bipartite=bool(bipartition(graph)),
        x=x,
        x_prime=x_prime,
        huang_below=None if d is None else top * top < d,
        is_pt_counterexample=is_pt,
        bound_d_2d1=bound,
    )


def _unpack_context(ctx):
    if hasattr(ctx, "group"):
        return ctx.group, ctx.connection_set
    G, S = ctx
    return G, S
