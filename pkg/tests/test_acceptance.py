"""End-to-end acceptance checks. Each test records one PASS/FAIL line that is
echoed in the terminal summary under "acceptance criteria"."""

import json
import math
import time
from fractions import Fraction

from cayley_forge.cli import main
from cayley_forge.constructions import dihedral_cover, iterate_wreath
from cayley_forge.graphs import (
    VertexSubset,
    bipartition,
    hypercube,
    induced_degrees,
    is_covering_map,
    max_degree_within,
    odd_graph,
)
from cayley_forge.groups import make_dihedral
from cayley_forge.search import (
    brute_force_oracle,
    census_dihedral,
    majority_min_max_degree,
    max_bounded_degree_subset,
)
from cayley_forge.verify import degree_one_bound, verify_certificate

import conftest
from conftest import random_cubic_corpus, random_graph_corpus

DRAWN_SET = {"1", "a^2", "a^3", "a^5", "a^6", "a b", "a^2 b", "a^4 b", "a^7 b", "a^8 b"}
WREATH_NODE_LIMIT = 20000


def report(number, ok, detail):
    line = f"CRITERION {number}: {'PASS' if ok else 'FAIL'} {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def reproduce(tmp_path, *argv):
    out = tmp_path / "cert.json"
    code = main(["reproduce", *map(str, argv), "--out", str(out)])
    return code, json.loads(out.read_text())


def test_criterion_1_odd_family(tmp_path):
    start = time.perf_counter()
    problems = []
    for n in range(1, 7):
        code, doc = reproduce(tmp_path, "odd", "--n", n)
        cert = doc["certificate"]
        graph = odd_graph(n)
        degs = induced_degrees(graph, VertexSubset(graph.n, frozenset(doc["subset"])))
        checks = [
            code == 0,
            cert["subset_size"] == math.comb(2 * n, n),
            Fraction(*cert["ratio"]) == Fraction(n + 1, 2 * n + 1) > Fraction(1, 2),
            set(degs.values()) == {1},
            cert["d"] == n + 1 and graph.regular_valency() == n + 1,
        ]
        if not all(checks):
            problems.append(n)
    elapsed = time.perf_counter() - start
    report(1, not problems and elapsed < 5,
           f"odd n=1..6 exact, failures={problems}, {elapsed:.2f}s (< 5s)")


def test_criterion_2_dihedral_family(tmp_path):
    start = time.perf_counter()
    problems = []
    D18 = make_dihedral(9)
    for m in range(1, 6):
        code, doc = reproduce(tmp_path, "dihedral", "--m", m)
        inst = dihedral_cover(m)
        ok = (code == 0 and doc["certificate"]["subset_size"] == 10 * m
              and doc["certificate"]["induced_max_degree"] == 1
              and max_degree_within(inst.graph, inst.subset)[0] == 1)
        if m == 1:
            ok = ok and {D18.label(v) for v in doc["subset"]} == DRAWN_SET
        else:
            base = inst.extras["base"]
            ok = ok and is_covering_map(inst.graph, base.graph, inst.extras["projection"].map)[0]
        if not ok:
            problems.append(m)
    elapsed = time.perf_counter() - start
    report(2, not problems and elapsed < 1,
           f"dihedral m=1..5, failures={problems}, {elapsed:.2f}s (< 1s)")


def test_criterion_3_wreath_family():
    start = time.perf_counter()
    chain = iterate_wreath(2)
    elapsed = time.perf_counter() - start
    orders = [inst.group_context.group.order for inst in chain]
    sizes = [len(inst.subset) for inst in chain]
    top = [max_degree_within(inst.graph, inst.subset)[0] for inst in chain]
    bip = [bool(bipartition(inst.graph)) for inst in chain]
    identity = all(
        len(chain[i].subset) == len(chain[i - 1].subset)
        + (2 ** chain[i - 1].graph.n - 1) * chain[i - 1].graph.n // 2
        for i in (1, 2)
    )
    ok = (orders == [2, 8, 2048] and sizes == [2, 5, 1025] and top == [1, 1, 1]
          and all(bip) and identity and elapsed < 10)
    report(3, ok, f"orders={orders} sizes={sizes} maxdeg={top} bipartite={bip} "
                  f"identity={identity}, {elapsed:.2f}s (< 10s)")


def test_criterion_4_threshold_predicate(gamma18, wreath_chain):
    details = []
    ok = True
    for name, inst in [("gamma18", gamma18), ("wreath2", wreath_chain[2])]:
        cert = verify_certificate(inst.graph, inst.subset, inst.group_context)
        k = cert.induced_max_degree
        lhs, rhs = 2 * k * k, 2 * cert.x + cert.x_prime
        ok = ok and cert.is_pt_counterexample and lhs < rhs
        details.append(f"{name}: {lhs} < {rhs}")
    report(4, ok, "; ".join(details))


def bound_corpus(gamma18, gamma36, wreath_chain):
    corpus = [(f"O{n}", odd_graph(n), True) for n in range(1, 5)]
    corpus += [("gamma18", gamma18.graph, True), ("gamma36", gamma36.graph, False)]
    corpus += [(f"Q{d}", hypercube(d), False) for d in range(1, 5)]
    corpus += [(f"wreath{i}", inst.graph, False) for i, inst in enumerate(wreath_chain)]
    corpus += [(f"cubic{i}", g, False) for i, g in enumerate(random_cubic_corpus())]
    return corpus


def test_criterion_5_degree_one_cap(gamma18, gamma36, wreath_chain):
    failures, unproven = [], []
    for name, graph, equality in bound_corpus(gamma18, gamma36, wreath_chain):
        d = graph.regular_valency()
        cap = degree_one_bound(d, graph.n)
        limit = WREATH_NODE_LIMIT if graph.n > 1000 else None
        res = max_bounded_degree_subset(graph, 1, node_limit=limit)
        if not res.proven_optimal:
            unproven.append(f"{name}={res.best_size}/cap {cap}")
        if res.best_size > cap or (equality and res.best_size != cap):
            failures.append(f"{name}: {res.best_size} vs cap {cap}")
    report(5, not failures,
           f"{len(bound_corpus(gamma18, gamma36, wreath_chain))} graphs within cap, "
           f"failures={failures}, unproven={unproven}")


def test_criterion_6_hypercube_control():
    start = time.perf_counter()
    found = []
    for d in range(1, 5):
        top, X = majority_min_max_degree(hypercube(d))
        # ceil(sqrt(d)) without floating point
        found.append((d, top, math.isqrt(d - 1) + 1, len(X)))
    elapsed = time.perf_counter() - start
    ok = all(top == want and top * top >= d for d, top, want, _ in found) and elapsed < 10
    report(6, ok, f"(d, min max degree, ceil sqrt d, |X|)={found}, {elapsed:.2f}s (< 10s)")


def test_criterion_7_oracle_equivalence(gamma18, wreath_chain):
    graphs = [odd_graph(1), odd_graph(2), gamma18.graph]
    graphs += [hypercube(d) for d in range(1, 5)]
    graphs += [inst.graph for inst in wreath_chain if inst.graph.n <= 18]
    graphs += random_cubic_corpus()
    graphs += random_graph_corpus()
    mismatches = 0
    runs = 0
    for graph in graphs:
        for k in (0, 1, 2):
            runs += 1
            if max_bounded_degree_subset(graph, k).best_size != brute_force_oracle(graph, k).best_size:
                mismatches += 1
    report(7, mismatches == 0, f"{runs} comparisons, mismatches={mismatches}")


def test_criterion_8_census():
    start = time.perf_counter()
    rows = census_dihedral(9, 3)
    d4 = census_dihedral(2, 3, min_half_order=2)
    elapsed = time.perf_counter() - start
    hit = [r for r in rows if r["n"] == 9 and tuple(r["connection_set"]) == (9, 10, 12)]
    ok = bool(hit) and d4 == [] and elapsed < 60
    report(8, ok, f"rows={[(r['n'], r['labels']) for r in rows]} D4 rows={len(d4)}, "
                  f"{elapsed:.2f}s (< 60s)")
