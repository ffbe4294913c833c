"""Command-line front end: ``cayley-forge reproduce|verify|search|census|export``.

Exit codes: 0 claims verified (or predicate true), 1 predicate false,
2 usage or parse error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path

from . import constructions as cons
from .errors import CayleyForgeError, PreconditionError, ResourceLimitError
from .formats import (
    CertificateFile,
    dumps,
    graph_from_dict,
    graph_to_dict,
    subset_from_list,
    to_dot,
)
from .graphs import Graph, bipartition, cayley_graph, max_degree_within
from .search import EXACT_CAP, census_dihedral, max_bounded_degree_subset
from .verify import verify_certificate

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

ENCODINGS = {
    "dihedral": "vertex i + n*j is a^i b^j",
    "wreath": "vertex bits*|G| + g is (bits, g); bit x of bits is the value at base element x",
    "odd": "vertices are n-subsets of {0..2n} in colex order; omega = 2n",
}


class UsageError(CayleyForgeError):
    pass


def build_instance(family: str, args) -> tuple[cons.CounterexampleInstance, dict]:
    if family == "odd":
        if args.n is None or args.n < 1:
            raise UsageError("odd needs --n >= 1")
        return cons.odd_counterexample(args.n), {"n": args.n}
    if family == "dihedral":
        m = 1 if args.m is None else args.m
        if m < 1:
            raise UsageError("dihedral needs --m >= 1")
        return cons.dihedral_cover(m), {"m": m}
    if family == "wreath":
        levels = 0 if args.levels is None else args.levels
        if levels < 0:
            raise UsageError("wreath needs --levels >= 0")
        chain = cons.iterate_wreath(levels)
        inst = chain[-1]
        inst.extras["chain"] = chain
        return inst, {"levels": levels}
    raise UsageError(f"unknown family {family!r}")


def family_claims(family: str, params: dict, inst, cert) -> list[tuple[str, bool]]:
    """Named claims for a family; each is re-derived from the instance."""
    top, degs = max_degree_within(inst.graph, inst.subset)
    claims = [("majority subset", 2 * cert.subset_size > cert.n)]
    if family == "wreath":
        # only a max-degree claim here: blocks away from the identity hold isolated vertices
        claims.append(("induced max degree exactly 1", top == 1))
    else:
        claims.append(("induced subgraph 1-regular", bool(degs) and set(degs.values()) == {1}))
    if family == "odd":
        n = params["n"]
        claims += [
            ("graph is (n+1)-regular", cert.d == n + 1),
            ("|U| = C(2n, n)", cert.subset_size == comb(2 * n, n)),
            ("ratio = (n+1)/(2n+1)", cert.ratio_fraction * (2 * n + 1) == n + 1),
        ]
    elif family == "dihedral":
        m = params["m"]
        claims += [
            ("|U| = 10m", cert.subset_size == 10 * m),
            ("graph is 3-regular on 18m vertices", cert.d == 3 and cert.n == 18 * m),
            ("below Cayley threshold", cert.is_pt_counterexample),
        ]
        if m == 1:
            D = inst.group_context.group
            drawn = {D.element(i, j) for i, j in cons.U18_EXPONENTS}
            claims.append(("subset equals the drawn 10-set", set(inst.subset.members) == drawn))
        else:
            claims.append(("projection is a covering map", inst.extras.get("is_cover") is True))
    elif family == "wreath":
        for level, step in enumerate(inst.extras["chain"]):
            G = step.group_context.group
            claims.append((f"level {level}: Cayley graph bipartite", bool(bipartition(step.graph))))
            claims.append((f"level {level}: valency {level + 1}",
                           step.graph.regular_valency() == level + 1))
            if level:
                prev = inst.extras["chain"][level - 1]
                m = prev.graph.n
                expected = len(prev.subset) + ((1 << m) - 1) * m // 2
                claims.append((f"level {level}: |H| = {expected} by the counting identity",
                               len(step.subset) == expected and G.order == (1 << m) * m))
        if params["levels"] >= 1:
            claims.append(("below Cayley threshold", cert.is_pt_counterexample))
    return claims


def cmd_reproduce(args) -> int:
    inst, params = build_instance(args.family, args)
    cert = verify_certificate(inst.graph, inst.subset, inst.group_context)
    claims = family_claims(args.family, params, inst, cert)
    params = dict(params, encoding=ENCODINGS[args.family])
    doc = CertificateFile(args.family, params, graph_to_dict(inst.graph, inst.group_context),
                          inst.subset.sorted(), cert.to_dict())
    _emit(dumps(doc.to_dict()), args.out)
    if args.dot:
        _write(args.dot, to_dot(inst.graph, inst.subset))
    failed = [name for name, ok in claims if not ok]
    for name, ok in claims:
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=sys.stderr)
    if failed:
        print(f"failing claim: {failed[0]}", file=sys.stderr)
        return EXIT_FALSE
    return EXIT_OK


def _load_json(path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _load_graph(path) -> tuple[Graph, tuple | None]:
    return graph_from_dict(_load_json(path))


def cmd_verify(args) -> int:
    raw = _load_json(args.graph)
    graph, context = graph_from_dict(raw)
    X = subset_from_list(_load_json(args.subset), graph.n)
    if context is not None and cayley_graph(*context) != graph:
        raise UsageError("graph edges do not match the declared group and connection set")
    cert = verify_certificate(graph, X, context)
    graph_doc = graph_to_dict(graph)
    if context is not None:
        graph_doc["group"] = raw["group"]
    doc = CertificateFile("user", {}, graph_doc, X.sorted(), cert.to_dict())
    _emit(dumps(doc.to_dict()), args.out)
    return EXIT_OK if cert.is_pt_counterexample else EXIT_FALSE


def cmd_search(args) -> int:
    graph, _ = _load_graph(args.graph)
    exact = not args.heuristic
    if exact and graph.n > EXACT_CAP:
        print(f"graph has {graph.n} vertices, above the exact cap {EXACT_CAP}; "
              f"rerun with --heuristic", file=sys.stderr)
        return EXIT_RESOURCE

    def report(nodes, best):
        print(f"nodes={nodes} incumbent={best}", file=sys.stderr)

    result = max_bounded_degree_subset(graph, args.max_degree, exact=exact,
                                       threads=args.threads, node_limit=args.node_limit,
                                       progress=report if args.progress else None)
    _emit(dumps(result.to_dict()), args.out)
    return EXIT_OK


def cmd_census(args) -> int:
    found = census_dihedral(args.max_half_order, args.connection_size,
                            min_half_order=args.min_half_order)
    rows = []
    for entry in found:
        row = {k: v for k, v in entry.items() if k != "result"}
        row["result"] = entry["result"].to_dict()
        rows.append(row)
    _emit(dumps(rows), args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.family:
        inst, _ = build_instance(args.family, args)
        graph, X = inst.graph, inst.subset
    elif args.graph:
        graph, _ = _load_graph(args.graph)
        X = subset_from_list(_load_json(args.subset), graph.n) if args.subset else None
    else:
        raise UsageError("export needs --family or --graph")
    _emit(to_dot(graph, X), args.dot)
    return EXIT_OK


def _write(path, text):
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        _write(path, text)


def _family_args(p):
    p.add_argument("--n", type=int, help="odd graph parameter")
    p.add_argument("--m", type=int, help="dihedral cover index (18m vertices)")
    p.add_argument("--levels", type=int, help="number of wreath lifts (0..2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayley-forge", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reproduce", help="build a counterexample family member and check it")
    p.add_argument("family", choices=["odd", "dihedral", "wreath"])
    _family_args(p)
    p.add_argument("--out", help="certificate path (default stdout)")
    p.add_argument("--dot", help="also write DOT with the subset shaded")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("verify", help="certificate for a user graph and subset; "
                                      "exit 0 iff the subset beats the Cayley threshold")
    p.add_argument("graph")
    p.add_argument("subset")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="largest subset of induced max degree <= k")
    p.add_argument("graph")
    p.add_argument("--max-degree", "-k", type=int, default=1)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--progress", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("census", help="sweep dihedral Cayley graphs for counterexamples")
    p.add_argument("--max-half-order", type=int, required=True)
    p.add_argument("--connection-size", type=int, required=True)
    p.add_argument("--min-half-order", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("export", help="write DOT with a subset shaded gray")
    p.add_argument("--family", choices=["odd", "dihedral", "wreath"])
    _family_args(p)
    p.add_argument("--graph")
    p.add_argument("--subset")
    p.add_argument("--dot", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, PreconditionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
