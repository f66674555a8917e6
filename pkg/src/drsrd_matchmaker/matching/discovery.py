"""
The discovery pipeline: weight split, transfer standards, candidate
optimization over dynamic rough sets, then matchmaking over the candidates.

Two baselines share the matchmaking phase: ``classic`` matches the classical
lower approximation of the initial candidates, ``exact`` keeps only resources
that advertise every requested property with a usable value.
"""

import logging
import time
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field

from ..errors import RequestError
from ..models.discovery import CandidateReport, TransferStandard, WeightSplit
from ..models.request import MatchResult, ResourceRequest, WeightedProperty
from ..ontology.taxonomy import Taxonomy
from ..rough.dynamic import (
    contracted_main_set,
    d_lower_approx,
    d_upper_approx,
    inflated_main_set,
)
from ..rough.table import InformationTable, ObjectSet, lower_approx, reduce_dependent_attributes
from .matchmaker import MAX_RATIO, RequestScorer, rank

logger = logging.getLogger(__name__)

HIGH_PRIORITY = 0.5
NO_TRANSFER = 1.0


class Algorithm(str, Enum):
    """Discovery algorithms."""
    DRSRD = "drsrd"
    CLASSIC = "classic"
    EXACT = "exact"

    @classmethod
    def parse(cls, name: Union[str, "Algorithm"]) -> "Algorithm":
        try:
            return cls(name)
        except ValueError:
            choices = ", ".join(a.value for a in cls)
            raise RequestError(f"unknown algorithm {name!r} (choose from {choices})") from None


class DiscoveryOutcome(BaseModel):
    """Ranked results of one discovery plus its provenance and timing."""
    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm
    threshold: float
    candidates: int = Field(..., description="Resources entering the matchmaking phase")
    results: List[MatchResult] = Field(default_factory=list)
    report: Optional[CandidateReport] = Field(None, description="Candidate optimization provenance (drsrd)")
    match_time_ns: int = Field(..., ge=0, description="Wall-clock time of the matchmaking phase")

    @property
    def retrieved(self) -> List[str]:
        return [r.resource for r in self.results]


def split_by_weight(request: ResourceRequest) -> WeightSplit:
    """Split a request at weight 0.5, keeping request order on both sides."""
    return WeightSplit(
        high=tuple(p for p in request.properties if p.weight >= HIGH_PRIORITY),
        low=tuple(p for p in request.properties if p.weight < HIGH_PRIORITY),
    )


def _mean_weight(side: Sequence[WeightedProperty], label: str) -> TransferStandard:
    if not side:
        logger.warning("No %s-priority properties; %s standard set to %.1f (no transfer)", label, label, NO_TRANSFER)
        return TransferStandard.of(NO_TRANSFER)
    total = sum(Fraction(repr(p.weight)) for p in side)
    return TransferStandard.of(total / len(side))


def inward_standard(high: Sequence[WeightedProperty]) -> TransferStandard:
    """Inward standard: mean weight of the high-priority side, 1.0 when it is empty."""
    return _mean_weight(high, "high")


def outward_standard(low: Sequence[WeightedProperty]) -> TransferStandard:
    """Outward standard: mean weight of the low-priority side, 1.0 when it is empty."""
    return _mean_weight(low, "low")


def initial_candidates(table: InformationTable, names: Iterable[str]) -> ObjectSet:
    """Resources with the maximum number of non-Null requested properties."""
    indices = [table.attribute_index(name) for name in names]
    counts = {
        obj: sum(1 for i in indices if not table.rows[obj][i].is_null)
        for obj in table.objects
    }
    best = max(counts.values(), default=0)
    if best == 0:
        logger.warning("No resource advertises any requested property")
        return frozenset()
    return frozenset(obj for obj, count in counts.items() if count == best)


def _check_request(table: InformationTable, request: ResourceRequest) -> List[str]:
    names = request.names
    if not names:
        raise RequestError("request has no properties")
    missing = [name for name in names if not table.has_attribute(name)]
    if missing:
        raise RequestError(f"requested properties not in the table: {', '.join(missing)}")
    return names


def optimize_candidates(
    table: InformationTable,
    request: ResourceRequest,
    reduce: bool = False,
    candidates: Optional[Iterable[str]] = None,
) -> CandidateReport:
    """
    Candidate optimization.

    1. inward and outward transfer standards from the request weights
    2. inflate the initial set over high-priority properties, contract it over low-priority ones
    3. two-direction set: initial minus contracted, plus inflated
    4. D-lower approximation of that set over every requested property

    ``candidates`` replaces the initial set when given.
    """
    names = _check_request(table, request)
    split = split_by_weight(request)
    d_plus = inward_standard(split.high)
    d_minus = outward_standard(split.low)

    if candidates is None:
        initial = initial_candidates(table, names)
    else:
        initial = table.check_objects(candidates)

    inflated = inflated_main_set(table, split.high_names, initial, d_plus) if split.high else frozenset()
    contracted = contracted_main_set(table, split.low_names, initial, d_minus) if split.low else frozenset()
    x_star = (initial - contracted) | inflated

    approx_attrs = tuple(table.canonical_attributes(names))
    if reduce and len(approx_attrs) >= 2:
        approx_attrs = reduce_dependent_attributes(table, approx_attrs)

    final = d_lower_approx(table, approx_attrs, x_star)
    logger.debug(
        "Candidates: initial=%d inflated=%d contracted=%d x*=%d final=%d",
        len(initial), len(inflated), len(contracted), len(x_star), len(final),
    )
    return CandidateReport(
        initial=table.ordered(initial),
        split=split,
        d_plus=d_plus,
        d_minus=d_minus,
        inflated=table.ordered(inflated),
        contracted=table.ordered(contracted),
        two_direction=table.ordered(x_star),
        reduced_attributes=approx_attrs,
        final=table.ordered(final),
        d_upper=table.ordered(d_upper_approx(table, approx_attrs, x_star)),
    )


def exact_candidates(table: InformationTable, request: ResourceRequest) -> ObjectSet:
    """Resources advertising every requested property non-Null, numeric ratios <= 5."""
    checks = []
    for wanted in request.properties:
        index = table.attribute_index(wanted.name)
        checks.append((index, wanted.value))
    kept = []
    for obj in table.objects:
        row = table.rows[obj]
        for index, requested in checks:
            value = row[index]
            if value.is_null:
                break
            if value.type.is_numeric and requested is not None and value.value / requested > MAX_RATIO:
                break
        else:
            kept.append(obj)
    return frozenset(kept)


def discover_with_report(
    tax: Taxonomy,
    table: InformationTable,
    request: ResourceRequest,
    algorithm: Union[str, Algorithm] = Algorithm.DRSRD,
    threshold: float = 0.8,
    reduce: bool = False,
) -> DiscoveryOutcome:
    """Run one discovery and keep its provenance and matching time."""
    algorithm = Algorithm.parse(algorithm)
    if not 0.0 <= threshold <= 1.0:
        raise RequestError(f"threshold must lie in [0, 1], got {threshold!r}")
    names = _check_request(table, request)

    report = None
    if algorithm is Algorithm.DRSRD:
        report = optimize_candidates(table, request, reduce=reduce)
        candidates = report.final
    elif algorithm is Algorithm.CLASSIC:
        initial = initial_candidates(table, names)
        candidates = table.ordered(lower_approx(table, names, initial))
    else:
        candidates = table.ordered(exact_candidates(table, request))

    scorer = RequestScorer(tax, request, table.attributes)
    started = time.perf_counter_ns()
    scored = []
    for obj in candidates:
        degree = scorer.score(table.rows[obj])
        if degree >= threshold:
            scored.append((obj, degree))
    results = rank(scored)
    elapsed = time.perf_counter_ns() - started

    logger.debug("%s matched %d of %d candidates in %d ns", algorithm.value, len(results), len(candidates), elapsed)
    return DiscoveryOutcome(
        algorithm=algorithm,
        threshold=threshold,
        candidates=len(candidates),
        results=results,
        report=report,
        match_time_ns=elapsed,
    )


def discover(
    tax: Taxonomy,
    table: InformationTable,
    request: ResourceRequest,
    algorithm: Union[str, Algorithm] = Algorithm.DRSRD,
    threshold: float = 0.8,
    reduce: bool = False,
) -> List[MatchResult]:
    """Ranked resources whose aggregate match degree reaches ``threshold``."""
    return discover_with_report(tax, table, request, algorithm, threshold, reduce).results
