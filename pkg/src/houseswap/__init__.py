"""Strict-core solver for house-swapping markets with duplicate house types.

Agents each own one house of some type and rank all types with complete
strict preferences; copies of a type are interchangeable for everyone.
The solver decides whether a strict-core allocation exists and computes
it when it does, by repeatedly trading away a sink strongly connected
component of the pointing graph on remaining types.  A
brute-force oracle, a classic top-trading-cycles reference for injective
endowments, a seeded market generator, and text file formats round out
the package.
"""

from .digraph import (
    Digraph,
    EmptyGraph,
    SccPartition,
    condensation,
    first_sink_scc,
    tarjan_scc,
)
from .fileformat import (
    ParseError,
    load_market,
    parse_allocation_text,
    parse_market_text,
    serialize_allocation,
    serialize_market,
)
from .gen import GenParams, InvalidParams, random_market
from .htts import (
    OpCounter,
    PointingGraph,
    Segment,
    SolveOutcome,
    build_pointing_graph,
    check_feasibility,
    format_segment,
    format_trace,
    htts_solve,
    solve_with_tiebreak,
)
from .market import (
    Allocation,
    DuplicateInPreferences,
    DuplicateName,
    EmptyRemainingSet,
    IncompletePreferences,
    Market,
    RawAgent,
    RawMarket,
    UnendowedHouseType,
    UnknownName,
    ValidationError,
    best_house,
    endowment_count,
    validate_market,
)
from .oracle import (
    BlockingCertificate,
    CapExceeded,
    NonInjectiveEndowment,
    enumerate_feasible_allocations,
    enumerate_strict_core,
    find_blocking_coalition,
    ttc_solve,
)

__all__ = [
    "Allocation",
    "BlockingCertificate",
    "CapExceeded",
    "Digraph",
    "DuplicateInPreferences",
    "DuplicateName",
    "EmptyGraph",
    "EmptyRemainingSet",
    "GenParams",
    "IncompletePreferences",
    "InvalidParams",
    "Market",
    "NonInjectiveEndowment",
    "OpCounter",
    "ParseError",
    "PointingGraph",
    "RawAgent",
    "RawMarket",
    "SccPartition",
    "Segment",
    "SolveOutcome",
    "UnendowedHouseType",
    "UnknownName",
    "ValidationError",
    "best_house",
    "build_pointing_graph",
    "check_feasibility",
    "condensation",
    "endowment_count",
    "enumerate_feasible_allocations",
    "enumerate_strict_core",
    "find_blocking_coalition",
    "first_sink_scc",
    "format_segment",
    "format_trace",
    "htts_solve",
    "load_market",
    "parse_allocation_text",
    "parse_market_text",
    "random_market",
    "serialize_allocation",
    "serialize_market",
    "solve_with_tiebreak",
    "tarjan_scc",
    "ttc_solve",
    "validate_market",
]

__version__ = "0.1.0"
