"""Hierarchical entanglement-structure diagrams for pure stabilizer states.

Builds the recursive w-cluster decomposition of a stabilizer state and
extracts multipartite-entanglement metrics from it: entanglement depth,
separable partitions, minimal stabilizer weight / k-uniformity, layer
counts, and entropy upper bounds across arbitrary cuts.
"""

from .clustering import (
    Diagram,
    DiagramNode,
    Element,
    build_diagram,
    find_indivisible_sets,
    merge_overlaps,
    singleton_elements,
)
from .ensembles import (
    EnsembleRecord,
    EnsembleSpec,
    EnsembleStats,
    evolve_measurement_only,
    evolve_unitary,
    run_ensemble,
)
from .entropy import EntropyCache, confined_stabilizer_count, entropy_bits, total_correlations
from .gf2 import BitMatrix, rank_of_ints
from .metrics import (
    MetricsReport,
    entanglement_depth,
    entropy_upper_bound,
    first_round_spatial_ranges,
    layer_count,
    metrics_report,
    minimal_stabilizer_weight,
    separable_partitions,
)
from .pauli import PauliParseError, PauliString, parse_pauli
from .states import (
    cluster1d,
    example_state,
    five_qubit_code_logical_x,
    ghz,
    steane_code_logical_x,
)
from .tableau import (
    CliffordGate,
    StabilizerTableau,
    ValidationError,
    get_gate,
    random_clifford_gate,
    random_two_qubit_clifford,
    recombine_generators,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "CliffordGate",
    "Diagram",
    "DiagramNode",
    "Element",
    "EnsembleRecord",
    "EnsembleSpec",
    "EnsembleStats",
    "EntropyCache",
    "MetricsReport",
    "PauliParseError",
    "PauliString",
    "StabilizerTableau",
    "ValidationError",
    "build_diagram",
    "cluster1d",
    "confined_stabilizer_count",
    "entanglement_depth",
    "entropy_bits",
    "entropy_upper_bound",
    "evolve_measurement_only",
    "evolve_unitary",
    "example_state",
    "find_indivisible_sets",
    "first_round_spatial_ranges",
    "five_qubit_code_logical_x",
    "get_gate",
    "ghz",
    "layer_count",
    "merge_overlaps",
    "metrics_report",
    "minimal_stabilizer_weight",
    "parse_pauli",
    "random_clifford_gate",
    "random_two_qubit_clifford",
    "rank_of_ints",
    "recombine_generators",
    "run_ensemble",
    "separable_partitions",
    "singleton_elements",
    "steane_code_logical_x",
    "total_correlations",
]
