"""Nowhere-zero flow certification for cubic graphs.

The library builds 2-factors, canonical 4-colorings, augmented graphs with
an explicit nowhere-zero 4-flow, flow partitions and the induced +-5/3
vertex valuations, and decides balance of a valuation exactly (by Hoffman
circulation feasibility or by exhaustive enumeration).  A balanced +-5/3
valuation is converted back into a verified nowhere-zero 5-flow.  Everything
is cross-checked by brute-force oracles at desk scale.
"""

from flowcert.errors import LimitExceeded, ParseError
from flowcert.limits import DEFAULT_LIMITS, Limits
from flowcert.multigraph import (
    CutResult,
    Multigraph,
    boundary,
    encode_graph6,
    find_bridges,
    girth,
    is_bridgeless,
    max_flow_min_cut,
    parse_graph,
)
from flowcert.factors import (
    ConnectivityProfile,
    Cycle,
    TwoFactor,
    connectivity_profile,
    cyclic_edge_connectivity,
    m_of,
    m_star,
    oddness_analysis,
    perfect_matchings,
    two_factor_of,
)
from flowcert.coloring import CanonicalColoring, DeficiencyPairing, canonical_coloring, deficiency_pairing
from flowcert.flows import (
    AugmentedGraph,
    Flow,
    FlowReport,
    build_augmented,
    construct_4flow,
    cycle_flow,
    flow_sum,
    verify_flow,
)
from flowcert.oracle import (
    OracleResult,
    bounded_circulation,
    mod_to_integer_flow,
    nz_mod_flow_oracle,
    orient_with_outdegrees,
)
from flowcert.valuations import (
    BalanceVerdict,
    FlowPartition,
    Valuation,
    balance_check_cut,
    balance_check_exhaustive,
    five_thirds_valuation,
    flow_partition,
    valuation_from_flow,
    valuation_to_flow,
)
from flowcert.counting import (
    CutColorStats,
    TreeReduction,
    cut_color_stats,
    random_connected_set,
    tree_reduction,
    verify_counting_propositions,
)
from flowcert.certify import Certificate, certify, hypothesis_check

__all__ = [
    "AugmentedGraph",
    "BalanceVerdict",
    "CanonicalColoring",
    "Certificate",
    "ConnectivityProfile",
    "CutColorStats",
    "CutResult",
    "Cycle",
    "DEFAULT_LIMITS",
    "DeficiencyPairing",
    "Flow",
    "FlowPartition",
    "FlowReport",
    "LimitExceeded",
    "Limits",
    "Multigraph",
    "OracleResult",
    "ParseError",
    "TreeReduction",
    "TwoFactor",
    "Valuation",
    "balance_check_cut",
    "balance_check_exhaustive",
    "boundary",
    "bounded_circulation",
    "build_augmented",
    "canonical_coloring",
    "certify",
    "connectivity_profile",
    "construct_4flow",
    "cut_color_stats",
    "cycle_flow",
    "cyclic_edge_connectivity",
    "deficiency_pairing",
    "encode_graph6",
    "find_bridges",
    "five_thirds_valuation",
    "flow_partition",
    "flow_sum",
    "girth",
    "hypothesis_check",
    "is_bridgeless",
    "m_of",
    "m_star",
    "max_flow_min_cut",
    "mod_to_integer_flow",
    "nz_mod_flow_oracle",
    "oddness_analysis",
    "orient_with_outdegrees",
    "parse_graph",
    "perfect_matchings",
    "random_connected_set",
    "tree_reduction",
    "two_factor_of",
    "valuation_from_flow",
    "valuation_to_flow",
    "verify_counting_propositions",
    "verify_flow",
]
