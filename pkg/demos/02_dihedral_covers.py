"""A Cayley graph on the dihedral group of order 18, and its covers.

Three reflections b, ab, a^3 b generate a cubic graph on 18 vertices. A fixed
10-vertex set induces a perfect matching. Dihedral groups of order 18m project
onto it, and pulling the set back along the projection keeps every induced
degree, so the ratio 10/18 survives at every size.
"""
from cayley_forge import dihedral_counterexample, dihedral_cover, verify_certificate
from cayley_forge.graphs import is_covering_map

base = dihedral_counterexample()
D = base.group_context.group
print("kept:", sorted(D.label(v) for v in base.subset))
cert = verify_certificate(base.graph, base.subset, base.group_context)
# all three generators are involutions, so the threshold is sqrt(3) > 1
print("involutions", cert.x, "others", cert.x_prime, "counterexample", cert.is_pt_counterexample)

# %% lift along D_{18m} -> D_18
for m in range(2, 6):
    inst = dihedral_cover(m)
    ok, _ = is_covering_map(inst.graph, base.graph, inst.extras["projection"].map)
    print(f"m={m}  n={inst.graph.n}  kept={len(inst.subset)}  cover={ok}")
