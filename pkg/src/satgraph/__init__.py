"""Saturation numbers of disjoint clique unions.

Constructions H(n; p1..pt), saturation certificates, the registry of known
closed forms, exhaustive small-n search and a local-search hunter.
"""

from __future__ import annotations

from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_labeling
from .construct import (
    CliquePattern,
    ConstructionError,
    FormulaVerdict,
    build_fixture,
    build_h,
    h_edge_count,
    lemma_threshold,
    min_order,
    predicted_sat,
)
from .embed import Witness, contains, count_embeddings_small, find_embedding, kernel_name, use_kernel
from .graph import CapacityError, Graph, Graph6Error, decode_graph6, encode_graph6
from .saturate import DeltaDiagnostics, SaturationReport, check_saturated, delta_diagnostics, is_free, is_saturated
from .search import (
    DomainError,
    HuntResult,
    SearchRangeError,
    SearchResult,
    enumerate_nonisomorphic,
    extremal_graphs,
    heuristic_hunt,
    sat_bruteforce,
    verify_uniqueness,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CliquePattern",
    "ConstructionError",
    "DeltaDiagnostics",
    "DomainError",
    "FormulaVerdict",
    "Graph",
    "Graph6Error",
    "HuntResult",
    "SaturationReport",
    "SearchRangeError",
    "SearchResult",
    "Witness",
    "are_isomorphic",
    "build_fixture",
    "build_h",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "check_saturated",
    "contains",
    "count_embeddings_small",
    "decode_graph6",
    "delta_diagnostics",
    "encode_graph6",
    "enumerate_nonisomorphic",
    "extremal_graphs",
    "find_embedding",
    "h_edge_count",
    "heuristic_hunt",
    "is_free",
    "is_saturated",
    "kernel_name",
    "lemma_threshold",
    "min_order",
    "predicted_sat",
    "sat_bruteforce",
    "use_kernel",
    "verify_uniqueness",
]
