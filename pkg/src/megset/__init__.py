"""Monitoring edge-geodetic sets for undirected graphs.

A set S of vertices monitors an edge e when some pair of S has e on all
of its shortest paths; S is an MEG-set when every edge is monitored.
This package verifies such sets, computes exact minimum ones, builds
witnesses from closed-form class results and from the feedback-edge-set
bound, and simulates edge-failure detection by a probe set.
"""

from .classes import (
    ClassResult,
    UnicyclicProfile,
    gen_complete,
    gen_cycle,
    gen_grid,
    gen_hypercube,
    gen_multipartite,
    gen_path,
    gen_star,
    meg_complete,
    meg_cycle,
    meg_grid,
    meg_hypercube,
    meg_multipartite,
    meg_tree,
    meg_unicyclic,
    recognize_class,
    unicyclic_profile,
)
from .errors import (
    DisconnectedGraphError,
    GraphFormatError,
    SizeCapExceededError,
    UnrecognizedClassError,
)
from .graph import (
    INFINITE,
    Graph,
    build_graph,
    count_shortest_paths,
    cut_vertices,
    distance,
    distance_matrix,
    distance_without_edge,
    is_connected,
    simplicial_vertices,
    twin_vertices,
)
from .hierarchy import (
    is_dem_set,
    is_edge_geodetic_set,
    is_geodetic_set,
    is_strong_edge_geodetic_set,
)
from .monitoring import (
    DetectionReport,
    WitnessReport,
    is_meg_set,
    monitored_edges,
    pair_monitors_edge,
    simulate_failure,
    witness_report,
)
from .randgraphs import random_connected, random_tree, random_unicyclic
from .solver import (
    SolveResult,
    all_minimum_megs,
    compose_via_cut_vertex,
    forced_vertices,
    minimum_meg,
)
from .structure import (
    CoreDecomposition,
    FesConstruction,
    base_graph,
    core_decomposition,
    feedback_edge_number,
    fes_meg_construction,
    gen_tightness_family,
    max_leaf_number,
)

__all__ = [
    "INFINITE",
    "Graph",
    "build_graph",
    "distance",
    "distance_matrix",
    "count_shortest_paths",
    "distance_without_edge",
    "is_connected",
    "simplicial_vertices",
    "twin_vertices",
    "cut_vertices",
    "pair_monitors_edge",
    "monitored_edges",
    "is_meg_set",
    "witness_report",
    "simulate_failure",
    "WitnessReport",
    "DetectionReport",
    "SolveResult",
    "forced_vertices",
    "minimum_meg",
    "all_minimum_megs",
    "compose_via_cut_vertex",
    "ClassResult",
    "UnicyclicProfile",
    "gen_path",
    "gen_cycle",
    "gen_complete",
    "gen_star",
    "gen_multipartite",
    "gen_hypercube",
    "gen_grid",
    "meg_tree",
    "meg_cycle",
    "unicyclic_profile",
    "meg_unicyclic",
    "meg_complete",
    "meg_multipartite",
    "meg_hypercube",
    "meg_grid",
    "recognize_class",
    "CoreDecomposition",
    "FesConstruction",
    "feedback_edge_number",
    "base_graph",
    "core_decomposition",
    "fes_meg_construction",
    "max_leaf_number",
    "gen_tightness_family",
    "is_geodetic_set",
    "is_edge_geodetic_set",
    "is_strong_edge_geodetic_set",
    "is_dem_set",
    "random_tree",
    "random_unicyclic",
    "random_connected",
    "GraphFormatError",
    "DisconnectedGraphError",
    "SizeCapExceededError",
    "UnrecognizedClassError",
]
