"""corecorona: exact independence, core/corona, and matching workbench."""

__version__ = "0.1.0"

from corecorona.graphs import (
    Graph,
    GraphFamilySpec,
    GraphFormatError,
    VertexSet,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    erdos_renyi,
    generate,
    parse_edge_list,
    parse_graph6,
    path_graph,
    serialize_edge_list,
    serialize_graph6,
    star,
)
from corecorona.independence import (
    CapExceededError,
    CoreCorona,
    MisFamily,
    clique_number,
    core_corona,
    enumerate_max_cliques,
    enumerate_maximal_independent,
    enumerate_omega,
    independence_number,
    is_very_well_covered,
)
from corecorona.matching import (
    HallCertificate,
    Matching,
    is_koenig_egervary,
    maximum_matching_size,
    saturating_matching,
)

__all__ = [
    "__version__",
    "Graph",
    "GraphFamilySpec",
    "GraphFormatError",
    "VertexSet",
    "CapExceededError",
    "CoreCorona",
    "MisFamily",
    "HallCertificate",
    "Matching",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "erdos_renyi",
    "generate",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "serialize_edge_list",
    "serialize_graph6",
    "star",
    "clique_number",
    "core_corona",
    "enumerate_max_cliques",
    "enumerate_maximal_independent",
    "enumerate_omega",
    "independence_number",
    "is_very_well_covered",
    "is_koenig_egervary",
    "maximum_matching_size",
    "saturating_matching",
]
