"""JSON and DOT serialisation for graphs, subsets and certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import PreconditionError
from .graphs import Graph, VertexSubset
from .groups import (
    CyclicGroup,
    DihedralGroup,
    FiniteGroup,
    WreathZ2Group,
    make_cyclic,
    make_dihedral,
    wreath_z2,
)


def group_to_dict(G: FiniteGroup) -> dict | None:
    if isinstance(G, CyclicGroup):
        return {"kind": "cyclic", "n": G.n}
    if isinstance(G, DihedralGroup):
        return {"kind": "dihedral", "n": G.n}
    if isinstance(G, WreathZ2Group):
        base = group_to_dict(G.base)
        return None if base is None else {"kind": "wreath", "base": base}
    return None


def group_from_dict(data: dict) -> FiniteGroup:
    kind = data.get("kind")
    if kind == "cyclic":
        return make_cyclic(int(data["n"]))
    if kind == "dihedral":
        return make_dihedral(int(data["n"]))
    if kind == "wreath":
        return wreath_z2(group_from_dict(data["base"]))
    raise PreconditionError(f"unknown group kind {kind!r}")


def graph_to_dict(graph: Graph, group_context=None) -> dict:
    """``{"n", "edges", "labels"}`` plus an optional ``"group"`` block
    naming the group and connection set of a Cayley graph."""
    out = {"n": graph.n,
           "edges": [list(e) for e in sorted(graph.edges())],
           "labels": [graph.label(v) for v in range(graph.n)]}
    if group_context is not None:
        desc = group_to_dict(group_context.group)
        if desc is not None:
            desc["connection_set"] = sorted(group_context.connection_set)
            out["group"] = desc
    return out


def graph_from_dict(data: dict) -> tuple[Graph, tuple | None]:
    """Inverse of :func:`graph_to_dict`; returns ``(graph, (G, S) or None)``."""
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"malformed graph document: {exc}") from exc
    labels = data.get("labels")
    graph = Graph.from_edges(n, edges, labels)
    context = None
    if "group" in data:
        G = group_from_dict(data["group"])
        context = (G, frozenset(int(s) for s in data["group"]["connection_set"]))
    return graph, context


def subset_to_list(X: VertexSubset) -> list[int]:
    return X.sorted()


def subset_from_list(data, n: int) -> VertexSubset:
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise PreconditionError("subset document must be a JSON list of integers")
    return VertexSubset(n, frozenset(data))


@dataclass
class CertificateFile:
    family: str
    params: dict
    graph: dict
    subset: list
    certificate: dict

    def to_dict(self) -> dict:
        return {"family": self.family, "params": self.params, "graph": self.graph,
                "subset": sorted(self.subset), "certificate": self.certificate}

    @classmethod
    def from_dict(cls, data: dict) -> "CertificateFile":
        return cls(data["family"], data["params"], data["graph"],
                   list(data["subset"]), data["certificate"])


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def save_certificate(cert: CertificateFile, path) -> None:
    Path(path).write_text(dumps(cert.to_dict()))


def load_certificate(path) -> CertificateFile:
    return CertificateFile.from_dict(json.loads(Path(path).read_text()))


def to_dot(graph: Graph, X: VertexSubset | None = None, name: str = "G") -> str:
    """DOT text with members of ``X`` filled gray and the rest white."""
    members = X.members if X is not None else frozenset()
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled];"]
    for v in range(graph.n):
        label = graph.label(v).replace('"', '\\"')
        fill = "gray" if v in members else "white"
        lines.append(f'  {v} [label="{label}", fillcolor={fill}];')
    for u, v in sorted(graph.edges()):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
