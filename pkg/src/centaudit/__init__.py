"""centaudit: exact graph centralities, relation auditing, and small-graph mining.

The library computes distance-based centralities of simple connected graphs
in exact rational arithmetic, evaluates a catalog of identities and
inequalities relating them, and mines graph populations (exhaustively up to 8
vertices, or by seeded random sampling) for counterexamples.
"""

from fractions import Fraction as Rational

from .graphs import (
    EdgeListError,
    Graph,
    SubgraphView,
    complete_graph,
    cycle_graph,
    enumerate_connected,
    generate,
    gnp_graph,
    graph_from_mask,
    induced_subsets,
    neighborhood,
    parse_edge_list,
    path_graph,
    pendant_vertices,
    serialize_edge_list,
    star_graph,
    watts_strogatz_graph,
)
from .metrics import (
    CentralityProfile,
    DisconnectedGraphError,
    DistanceMatrix,
    apsp,
    average_clustering,
    avg_path_length,
    biconnected_blocks,
    closeness,
    diameter,
    global_clustering,
    internal_distances,
    is_even_cycle_free,
    is_geodetic,
    local_clustering,
    profile,
    radiality,
    restricted_avg_path_length,
    stress,
)
from .mining import (
    ConnectivityRetryError,
    GeodeticAudit,
    MiningReport,
    RelationTally,
    Witness,
    audit_geodetic_equivalence,
    equality_census,
    mine_exhaustive,
    mine_random,
)
from .relations import (
    AUDIT_INEQUALITY,
    EQUALITY,
    EXACT_IDENTITY,
    HOLDS,
    INEQUALITY,
    RELATION_IDS,
    SKIPPED,
    VIOLATED,
    RelationResult,
    RelationSpec,
    catalog,
    evaluate,
    evaluate_all,
    relation,
    restricted_radiality_sum,
)

__version__ = "0.1.0"

__all__ = [
    "AUDIT_INEQUALITY",
    "CentralityProfile",
    "ConnectivityRetryError",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "EQUALITY",
    "EXACT_IDENTITY",
    "EdgeListError",
    "GeodeticAudit",
    "Graph",
    "HOLDS",
    "INEQUALITY",
    "MiningReport",
    "RELATION_IDS",
    "Rational",
    "RelationResult",
    "RelationSpec",
    "RelationTally",
    "SKIPPED",
    "SubgraphView",
    "VIOLATED",
    "Witness",
    "apsp",
    "audit_geodetic_equivalence",
    "average_clustering",
    "avg_path_length",
    "biconnected_blocks",
    "catalog",
    "closeness",
    "complete_graph",
    "cycle_graph",
    "diameter",
    "enumerate_connected",
    "equality_census",
    "evaluate",
    "evaluate_all",
    "generate",
    "global_clustering",
    "gnp_graph",
    "graph_from_mask",
    "induced_subsets",
    "internal_distances",
    "is_even_cycle_free",
    "is_geodetic",
    "local_clustering",
    "mine_exhaustive",
    "mine_random",
    "neighborhood",
    "parse_edge_list",
    "path_graph",
    "pendant_vertices",
    "profile",
    "radiality",
    "relation",
    "restricted_avg_path_length",
    "restricted_radiality_sum",
    "serialize_edge_list",
    "star_graph",
    "stress",
    "watts_strogatz_graph",
]
