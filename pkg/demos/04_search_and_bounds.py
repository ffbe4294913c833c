"""How large can a set inducing max degree 1 be?

In a d-regular graph on n vertices such a set has at most d n / (2d - 1)
vertices. Exact branch and bound shows the odd graphs and the 18-vertex
dihedral graph sit right on that cap, while the 36-vertex cover falls one short.
"""
import time

from cayley_forge import dihedral_counterexample, dihedral_cover, max_bounded_degree_subset
from cayley_forge.graphs import hypercube, odd_graph
from cayley_forge.verify import degree_one_bound

cases = [("O2", odd_graph(2)), ("O3", odd_graph(3)), ("O4", odd_graph(4)),
         ("D18", dihedral_counterexample().graph), ("D36", dihedral_cover(2).graph),
         ("Q4", hypercube(4))]
for name, g in cases:
    t0 = time.perf_counter()
    res = max_bounded_degree_subset(g, k=1)
    cap = degree_one_bound(g.regular_valency(), g.n)
    print(f"{name:4s} n={g.n:4d} best={res.best_size:3d} cap={cap:3d} "
          f"proven={res.proven_optimal} nodes={res.nodes_explored} {time.perf_counter() - t0:.2f}s")

# %% larger k relaxes the constraint; the answer can only grow
g = odd_graph(2)
print([max_bounded_degree_subset(g, k).best_size for k in range(4)])
