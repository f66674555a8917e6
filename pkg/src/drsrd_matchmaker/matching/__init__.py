"""
Matchmaking and the discovery pipeline.
"""

from .discovery import (
    Algorithm,
    DiscoveryOutcome,
    discover,
    discover_with_report,
    exact_candidates,
    initial_candidates,
    inward_standard,
    optimize_candidates,
    outward_standard,
    split_by_weight,
)
from .matchmaker import RequestScorer, aggregate_match, property_match_degree, rank
from .requests import load_request, parse_request

__all__ = [
    "Algorithm", "DiscoveryOutcome", "discover", "discover_with_report", "exact_candidates",
    "initial_candidates", "inward_standard", "outward_standard", "optimize_candidates",
    "split_by_weight", "RequestScorer", "aggregate_match", "property_match_degree", "rank",
    "load_request", "parse_request",
]
