"""Deciding 2-factor Hamiltonicity and its relatives for cubic graphs.

Toolkit for perfect-matching / 2-factor analysis of cubic (mostly
bipartite) graphs: exhaustive and randomized classification, exhaustive
generation at small orders, structural invariants (connectivity,
automorphisms), star products and voltage-graph lifts.
"""

from .backend import USING_NUMBA, backend_name
from .canon import (
    AutomorphismInfo,
    are_isomorphic,
    automorphisms,
    canonical_form,
    canonical_labeling,
    transitivity,
)
from .connectivity import (
    EdgeCut,
    cyclic_edge_connectivity,
    edge_connectivity,
    is_essentially_4ec,
    nontrivial_3_edge_cuts,
    three_edge_cuts,
)
from .constructions import (
    NAMED_GRAPHS,
    StarProductSpec,
    constituents,
    induced_pairing,
    named,
    star_product,
    three_cut_reduction,
)
from .generate import generate, pipeline_classify, random_cubic_bipartite
from .graphs import (
    Bipartition,
    Graph,
    Graph6Error,
    GraphError,
    NotBipartite,
    bipartition,
    girth,
    is_bipartite,
    parse_graph6,
    write_graph6,
)
from .matchings import (
    Budget,
    ClassificationReport,
    classify,
    enumerate_perfect_matchings,
    heuristic_matching,
    two_factor_of,
)
from .voltage import (
    BaseGraph,
    FiniteGroup,
    VoltageAssignment,
    base_of,
    enumerate_lifts,
    lift,
    make_group,
    theta_graph,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismInfo",
    "BaseGraph",
    "Bipartition",
    "Budget",
    "ClassificationReport",
    "EdgeCut",
    "FiniteGroup",
    "Graph",
    "Graph6Error",
    "GraphError",
    "NAMED_GRAPHS",
    "NotBipartite",
    "StarProductSpec",
    "USING_NUMBA",
    "VoltageAssignment",
    "are_isomorphic",
    "automorphisms",
    "backend_name",
    "base_of",
    "bipartition",
    "canonical_form",
    "canonical_labeling",
    "classify",
    "constituents",
    "cyclic_edge_connectivity",
    "edge_connectivity",
    "enumerate_lifts",
    "enumerate_perfect_matchings",
    "generate",
    "girth",
    "heuristic_matching",
    "induced_pairing",
    "is_bipartite",
    "is_essentially_4ec",
    "lift",
    "make_group",
    "named",
    "nontrivial_3_edge_cuts",
    "parse_graph6",
    "pipeline_classify",
    "random_cubic_bipartite",
    "star_product",
    "theta_graph",
    "three_cut_reduction",
    "three_edge_cuts",
    "transitivity",
    "two_factor_of",
    "write_graph6",
]
