"""Control experiment on hypercubes.

On Q_d every set of more than half the vertices induces a vertex of degree at
least sqrt(d), and that is tight. Brute force over all majority sets checks
this for d <= 4, which is the contrast to the Cayley examples above.
"""
from math import isqrt

from cayley_forge.graphs import hypercube
from cayley_forge.search import majority_min_max_degree

for d in range(1, 5):
    top, X = majority_min_max_degree(hypercube(d))
    print(f"Q{d}: best majority set forces degree {top} (ceil sqrt d = {isqrt(d - 1) + 1}), "
          f"e.g. {X.sorted()}")
