"""longcycle: decide whether a directed graph contains a simple cycle on at
least k vertices, with verified witnesses."""

from .errors import CapacityError
from .experiments import (
    ExperimentReport,
    amplification_closed_form,
    estimate_amplification,
    estimate_split_probability,
    exact_split_probability,
)
from .generator import GenerationError, generate_planted_instance, random_digraph
from .graph import (
    CycleWitness,
    DirectedGraph,
    GraphParseError,
    PathWitness,
    ValidationResult,
    bfs_shortest_path,
    bfs_tree,
    induced_subgraph,
    parse_graph,
    serialize_graph,
    validate_cycle,
    validate_path,
)
from .kpath import (
    ColorCodingBackend,
    ExtractionError,
    KPathQuery,
    SubsetDPBackend,
    color_coding_decide,
    decide_kpath,
    default_repetitions,
    extract_path_witness,
    subset_dp_decide,
    subset_dp_states,
)
from .oracle import (
    OracleResult,
    all_cycle_lengths,
    brute_force_longest_cycle,
    exact_path_exists,
    longest_cycle_by_permutations,
    min_path_vertices,
    path_endpoints_by_length,
)
from .partition import (
    PartitionLR,
    UniversalSetFamily,
    VerificationBudgetError,
    VerifyResult,
    build_universal_set,
    cached_universal_set,
    family_from_text,
    family_to_text,
    partitions_from_family,
    random_partition,
    verify_universal,
)
from .solver import (
    SolveResult,
    SolverConfig,
    WitnessVerificationError,
    short_cycle_scan,
    solve,
    solve_verified,
)
from .splitcycle import ContractViolation, SplitSearchOutcome, join_paths, split_cycle_search

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ColorCodingBackend",
    "ContractViolation",
    "CycleWitness",
    "DirectedGraph",
    "ExperimentReport",
    "ExtractionError",
    "GenerationError",
    "GraphParseError",
    "KPathQuery",
    "OracleResult",
    "PartitionLR",
    "PathWitness",
    "SolveResult",
    "SolverConfig",
    "SplitSearchOutcome",
    "SubsetDPBackend",
    "UniversalSetFamily",
    "ValidationResult",
    "VerificationBudgetError",
    "VerifyResult",
    "WitnessVerificationError",
    "all_cycle_lengths",
    "amplification_closed_form",
    "bfs_shortest_path",
    "bfs_tree",
    "brute_force_longest_cycle",
    "build_universal_set",
    "cached_universal_set",
    "color_coding_decide",
    "decide_kpath",
    "default_repetitions",
    "estimate_amplification",
    "estimate_split_probability",
    "exact_path_exists",
    "exact_split_probability",
    "extract_path_witness",
    "family_from_text",
    "family_to_text",
    "generate_planted_instance",
    "induced_subgraph",
    "join_paths",
    "longest_cycle_by_permutations",
    "min_path_vertices",
    "parse_graph",
    "partitions_from_family",
    "path_endpoints_by_length",
    "random_digraph",
    "random_partition",
    "serialize_graph",
    "short_cycle_scan",
    "solve",
    "solve_verified",
    "split_cycle_search",
    "subset_dp_decide",
    "subset_dp_states",
    "validate_cycle",
    "validate_path",
    "verify_universal",
]
