"""Odd graphs carry large sets that induce a perfect matching.

Take the n-subsets of {0, ..., 2n} and join disjoint ones. Keeping the subsets
that avoid the last point gives more than half the vertices, and each kept
subset has exactly one kept neighbour.
"""
from math import comb

from cayley_forge import odd_counterexample, verify_certificate

# %% the Petersen graph first
inst = odd_counterexample(2)
print(inst.graph, "kept", len(inst.subset), "ratio", inst.ratio)
cert = verify_certificate(inst.graph, inst.subset)
print("induced max degree", cert.induced_max_degree, "cap", cert.bound_d_2d1)

# %% the kept fraction (n+1)/(2n+1) drifts down to 1/2 but never reaches it
for n in range(1, 7):
    inst = odd_counterexample(n)
    assert len(inst.subset) == comb(2 * n, n)
    print(f"n={n}  vertices={inst.graph.n:5d}  kept={len(inst.subset):4d}  ratio={inst.ratio}")
