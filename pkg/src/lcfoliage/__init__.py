"""Foliage partitions and local-complementation invariants of graph states."""

from .canonical import canonical_form, canonical_graph, canonical_key
from .entanglement import (
    EntropyVector,
    UniformityReport,
    e_matrix,
    entropy,
    entropy_via_foliage,
    marginal_maximally_mixed,
    schmidt_vector,
    statevector_entropy_oracle,
    uniformity,
)
from .foliage import (
    FoliagePartition,
    FoliageRepresentation,
    PartType,
    SaturationReport,
    foliage_graph,
    foliage_partition,
    foliage_representation,
    foliage_set,
    lifted_local_complement,
    normal_form,
    partition_text,
    reconstruct_graph,
    representation_json,
    representation_text,
    saturation,
    vertices_related,
)
from .gf2 import BitMatrix, gf2_rank
from .graph import (
    Graph,
    SizeGuardError,
    WeightedGraph,
    build_graph,
    build_weighted_graph,
    connected_components,
    local_complement,
    qudit_scale,
    qudit_star,
)
from .graph6 import decode_graph6, decode_weighted, encode_graph6, encode_weighted
from .orbits import (
    AutReport,
    ClassCensus,
    LCClass,
    OrbitReport,
    SaturationStatsRow,
    aut_bounds,
    aut_in_group,
    class_lower_bound,
    graph_for_partition,
    integer_partitions,
    lc_automorphism_group,
    lc_classes,
    lc_orbit,
    nonisomorphic_graphs,
    partition_number,
    saturation_stats,
    symmetry_table,
)

__version__ = "0.1.0"

__all__ = [
    "AutReport",
    "BitMatrix",
    "ClassCensus",
    "EntropyVector",
    "FoliagePartition",
    "FoliageRepresentation",
    "Graph",
    "LCClass",
    "OrbitReport",
    "PartType",
    "SaturationReport",
    "SaturationStatsRow",
    "SizeGuardError",
    "UniformityReport",
    "WeightedGraph",
    "aut_bounds",
    "aut_in_group",
    "build_graph",
    "build_weighted_graph",
    "canonical_form",
    "canonical_graph",
    "canonical_key",
    "class_lower_bound",
    "connected_components",
    "decode_graph6",
    "decode_weighted",
    "e_matrix",
    "encode_graph6",
    "encode_weighted",
    "entropy",
    "entropy_via_foliage",
    "foliage_graph",
    "foliage_partition",
    "foliage_representation",
    "foliage_set",
    "gf2_rank",
    "graph_for_partition",
    "integer_partitions",
    "lc_automorphism_group",
    "lc_classes",
    "lc_orbit",
    "lifted_local_complement",
    "local_complement",
    "marginal_maximally_mixed",
    "nonisomorphic_graphs",
    "normal_form",
    "partition_number",
    "partition_text",
    "qudit_scale",
    "qudit_star",
    "reconstruct_graph",
    "representation_json",
    "representation_text",
    "saturation",
    "saturation_stats",
    "schmidt_vector",
    "statevector_entropy_oracle",
    "symmetry_table",
    "uniformity",
    "vertices_related",
]
