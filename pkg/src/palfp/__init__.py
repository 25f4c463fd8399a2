"""Palindromic fingerprints: computation, validation and reconstruction."""

from palfp.constraints import (
    ConstraintPair,
    EqualityPartition,
    RestrictionGraph,
    build_restriction_graph,
    derive_equalities,
    derive_inequalities,
    export_dot,
    has_self_loop,
)
from palfp.extremal import (
    chromatic_number_exact,
    enumerate_canonical_strings,
    enumerate_fingerprints,
    ipf,
    optimal_string,
    verify_clique,
    verify_ipf,
    verify_log_bound,
    verify_uniqueness,
    zimin,
)
from palfp.reconstruct import (
    Coloring,
    ValidationReport,
    coloring_to_string,
    greedy_reconstruct,
    reconstruct_exact_k,
    sigma,
    string_to_coloring,
    validate,
)
from palfp.strings import (
    CenterTable,
    Fingerprint,
    PalDescriptor,
    Text,
    canonicalize,
    fingerprint_of,
    make_fingerprint,
    maximal_palindromes,
    param_match,
    parse_fingerprint,
    parse_text,
    serialize_fingerprint,
    serialize_text,
)
from palfp.structure import (
    Island,
    check_decomposition_bound,
    crossing_pairs,
    dominated,
    island_sigma,
    islands,
    representatives,
)

__version__ = "0.1.0"
