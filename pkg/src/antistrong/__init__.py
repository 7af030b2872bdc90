"""Antistrong digraph toolkit.

Recognition and witnesses, matroid machinery, minimum augmentation,
antistrong orientations with partition certificates, detachments,
spanning-subdigraph packing, reduction gadget generators, and the
file/JSON plumbing plus HTTP service around them.
"""

from .analysis import (
    CATWitness,
    TrailWitness,
    check_cat,
    check_trail,
    even_trails,
    find_cat,
    forward_trail,
    forward_trails_k,
    has_antidirected_trail,
    is_antistrong,
    k_arc_antistrong,
)
from .augment import (
    AugmentationResult,
    augment_antistrong,
    augment_k_arc_antistrong,
    augment_k_disjoint,
)
from .errors import (
    AntistrongError,
    Disconnected,
    InvalidInput,
    NoBase,
    NotAntistrong,
    NotAPartition,
    OpenProblem,
    ParseError,
    SchemaMismatch,
    SizeLimit,
    TooFewVertices,
)
from .graphs import Digraph, UGraph, bipartite_rep
from .hardness import (
    AvoidPairsInstance,
    SatFormula,
    exact_antidirected_path,
    exact_avoid_pairs_path,
    gen_antipath_instance,
    gen_avoid_pairs,
    gen_kkk_k4,
    gen_kstrong_nonantistrong,
    gen_variable_gadget,
    parse_dimacs,
    to_simple,
)
from .instances import instance_hash, parse_instance, serialize_instance
from .matroids import (
    MatroidOracle,
    UnionResult,
    antistrong_matroid_indep,
    bicircular_indep,
    cycle_matroid_indep,
    even_bicircular_indep,
    graph_count_f,
    matroid_union_max,
    min_cost_base,
    rank_bruteforce,
    union_oracle,
)
from .orientation import (
    Detachment,
    Orientation,
    PartitionCertificate,
    RedComponent,
    TwoDecomposition,
    anticonnected_orientation,
    antistrong_orientation,
    appendix_decomposition,
    catfree_orient,
    decompose_forest_odd_pseudoforest,
    detachment_is_good,
    good_2_detachment,
    two_decomposition,
    verify_certificate,
)
from .packing import (
    NonseparatingResult,
    PackResult,
    mixed_pack,
    nonseparating_antistrong,
    pack_antistrong,
)
from .verify import verify_certificate_json

__version__ = "0.1.0"

__all__ = [
    "AntistrongError",
    "AugmentationResult",
    "AvoidPairsInstance",
    "CATWitness",
    "Detachment",
    "Digraph",
    "Disconnected",
    "InvalidInput",
    "MatroidOracle",
    "NoBase",
    "NonseparatingResult",
    "NotAPartition",
    "NotAntistrong",
    "OpenProblem",
    "Orientation",
    "PackResult",
    "ParseError",
    "PartitionCertificate",
    "RedComponent",
    "SatFormula",
    "SchemaMismatch",
    "SizeLimit",
    "TooFewVertices",
    "TrailWitness",
    "TwoDecomposition",
    "UGraph",
    "UnionResult",
    "anticonnected_orientation",
    "antistrong_matroid_indep",
    "antistrong_orientation",
    "appendix_decomposition",
    "augment_antistrong",
    "augment_k_arc_antistrong",
    "augment_k_disjoint",
    "bicircular_indep",
    "bipartite_rep",
    "catfree_orient",
    "check_cat",
    "check_trail",
    "cycle_matroid_indep",
    "decompose_forest_odd_pseudoforest",
    "detachment_is_good",
    "even_bicircular_indep",
    "even_trails",
    "exact_antidirected_path",
    "exact_avoid_pairs_path",
    "find_cat",
    "forward_trail",
    "forward_trails_k",
    "gen_antipath_instance",
    "gen_avoid_pairs",
    "gen_kkk_k4",
    "gen_kstrong_nonantistrong",
    "gen_variable_gadget",
    "good_2_detachment",
    "graph_count_f",
    "has_antidirected_trail",
    "instance_hash",
    "is_antistrong",
    "k_arc_antistrong",
    "matroid_union_max",
    "min_cost_base",
    "mixed_pack",
    "nonseparating_antistrong",
    "pack_antistrong",
    "parse_dimacs",
    "parse_instance",
    "rank_bruteforce",
    "serialize_instance",
    "to_simple",
    "two_decomposition",
    "union_oracle",
    "verify_certificate",
    "verify_certificate_json",
]
