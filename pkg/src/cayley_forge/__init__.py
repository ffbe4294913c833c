"""Finite groups, Cayley graphs and majority vertex sets of induced max degree 1.

Builds the odd-graph, dihedral and iterated-wreath counterexamples to the
``sqrt(x + x'/2)`` Cayley-graph conjecture, verifies them exactly, and
searches arbitrary small graphs for the largest set of bounded induced degree.
"""

from .constructions import (
    CounterexampleInstance,
    dihedral_counterexample,
    dihedral_cover,
    iterate_wreath,
    odd_counterexample,
    wreath_lift,
)
from .errors import (
    CayleyForgeError,
    InvalidParameterError,
    PreconditionError,
    ResourceLimitError,
)
from .graphs import (
    Bipartition,
    Graph,
    VertexSubset,
    bipartition,
    cayley_graph,
    hypercube,
    is_covering_map,
    lift_subset,
    max_degree_within,
    odd_graph,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    canonical_generating_set,
    make_cyclic,
    make_dihedral,
    quotient,
    subgroup_generated,
    wreath_z2,
)
from .search import (
    SearchResult,
    brute_force_oracle,
    census_dihedral,
    max_bounded_degree_subset,
)
from .verify import (
    Certificate,
    degree_one_bound,
    potechin_tsang_threshold,
    verify_certificate,
)

__version__ = "0.1.0"
