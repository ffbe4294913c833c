"""Iterating the Z2 wreath lift.

Starting from a single edge (Z2 with its one generator), each lift keeps the
graph bipartite and Cayley, raises the valency by one, and produces a set of
more than half the vertices that induces maximum degree 1.
"""
from cayley_forge import iterate_wreath, verify_certificate

for level, inst in enumerate(iterate_wreath(2)):
    cert = verify_certificate(inst.graph, inst.subset, inst.group_context)
    print(f"level {level}: |G|={inst.graph.n:5d} valency={cert.d} kept={cert.subset_size:5d} "
          f"max degree={cert.induced_max_degree} beats threshold={cert.is_pt_counterexample}")

# a third lift would need a group of order 2^2048 * 2048, so it is refused
try:
    iterate_wreath(3)
except Exception as err:
    print(type(err).__name__, err)
