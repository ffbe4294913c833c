import random
from itertools import combinations

import pytest

from cayley_forge.constructions import dihedral_counterexample, dihedral_cover, iterate_wreath
from cayley_forge.graphs import Graph, cycle_graph, hypercube, odd_graph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_graph(n, p, rng):
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_regular(n, d, rng):
    """Pairing model with rejection; ``n * d`` must be even."""
    while True:
        points = [v for v in range(n) for _ in range(d)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, edges)


def random_graph_corpus(count=200, max_n=16, seed=20240917):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice([0.1, 0.25, 0.5, 0.75, 0.9])
        out.append(random_graph(n, p, rng))
    return out


def random_cubic_corpus(count=50, seed=7):
    rng = random.Random(seed)
    return [random_regular(rng.choice([4, 6, 8, 10, 12, 14, 16]), 3, rng) for _ in range(count)]


def brute_subsets_max(graph, k):
    """Plain-Python enumeration, used to check the numpy oracle itself."""
    for r in range(graph.n, -1, -1):
        for combo in combinations(range(graph.n), r):
            s = set(combo)
            if all(sum(u in s for u in graph.adjacency[v]) <= k for v in s):
                return r


@pytest.fixture(scope="session")
def petersen():
    return odd_graph(2)


@pytest.fixture(scope="session")
def gamma18():
    return dihedral_counterexample()


@pytest.fixture(scope="session")
def gamma36():
    return dihedral_cover(2)


@pytest.fixture(scope="session")
def wreath_chain():
    return iterate_wreath(2)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture(scope="session")
def q4():
    return hypercube(4)
