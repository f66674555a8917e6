"""
Per-property match degrees and the weighted aggregate match.

Text properties score by relation: Exact and PlugIn(1) give 1.0, PlugIn(d) loses
0.1 per extra generation down to 0.5, Subsume(d) starts at 0.8. Numeric
properties of equal declared type score by the ratio advertised/requested. An
advertised Null scores 0.5 against any property it is related to.
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import RequestError, ValueTypeError
from ..models.request import MatchResult, ResourceRequest
from ..models.resource import ResourceRecord
from ..models.values import AttributeValue, ValueType
from ..ontology.taxonomy import MatchRelation, RelationKind, Taxonomy

logger = logging.getLogger(__name__)

NULL_DEGREE = 0.5
FLOOR_DEGREE = 0.5
MAX_RATIO = 5

Number = Union[int, float]

_TEXT, _NUMERIC, _INCOMPARABLE = 0, 1, 2


def relation_degree(rel: MatchRelation) -> float:
    """Degree of a Text/Text pair from its relation alone."""
    if rel.kind is RelationKind.EXACT:
        return 1.0
    if rel.kind is RelationKind.PLUG_IN:
        if rel.distance <= 1:
            return 1.0
        if rel.distance <= 5:
            return 1.0 - (rel.distance - 1) * 0.1
        return FLOOR_DEGREE
    if rel.kind is RelationKind.SUBSUME:
        if rel.distance <= 3:
            return 0.8 - (rel.distance - 1) * 0.1
        return FLOOR_DEGREE
    return 0.0


def ratio_degree(advertised: Number, requested: Number) -> float:
    """Degree of a numeric pair from rho = advertised / requested."""
    if not requested > 0:
        raise RequestError(f"requested numeric value must be positive, got {requested!r}")
    rho = advertised / requested
    if rho > MAX_RATIO:
        return FLOOR_DEGREE
    return min(1.0, max(0.0, 1.0 - rho * 0.1))


def _check_type(tax: Taxonomy, name: str, value: AttributeValue) -> ValueType:
    declared = tax.property(name).value_type
    if not value.is_null and value.type is not declared:
        raise ValueTypeError(f"property {name!r} is declared {declared.value}, got {value!r}")
    return declared


def property_match_degree(
    tax: Taxonomy,
    advertised: Tuple[str, AttributeValue],
    requested: Tuple[str, Optional[Number]],
) -> float:
    """Degree of one advertised property value against one requested property."""
    adv_name, adv_value = advertised
    req_name, req_value = requested
    adv_type = _check_type(tax, adv_name, adv_value)
    req_type = tax.property(req_name).value_type

    rel = tax.relation(req_name, adv_name)
    if not rel.is_match:
        return 0.0
    if adv_value.is_null:
        return NULL_DEGREE
    if adv_type is ValueType.TEXT and req_type is ValueType.TEXT:
        return relation_degree(rel)
    if adv_type.is_numeric and adv_type is req_type:
        if req_value is None:
            raise RequestError(f"requested property {req_name!r} needs a numeric value")
        return ratio_degree(adv_value.value, req_value)
    return 0.0


class RequestScorer:
    """
    A request compiled against an ordered list of advertised property names.

    Scoring a row of values in that order gives the aggregate match degree:
    the weighted mean, over requested properties, of the best degree any
    relevant advertised property reaches.
    """

    def __init__(self, tax: Taxonomy, request: ResourceRequest, advertised: Sequence[str]):
        if not request.properties:
            raise RequestError("request has no properties")
        self.request = request
        self.advertised = tuple(advertised)
        position = {name: i for i, name in enumerate(self.advertised)}
        relevant = tax.prune_irrelevant(self.advertised, request.names)

        self._plan: List[Tuple[float, List[tuple]]] = []
        for wanted in request.properties:
            req_type = tax.property(wanted.name).value_type
            entries = []
            for name in relevant:
                rel = tax.relation(wanted.name, name)
                if not rel.is_match:
                    continue
                adv_type = tax.property(name).value_type
                if adv_type is ValueType.TEXT and req_type is ValueType.TEXT:
                    entries.append((position[name], _TEXT, relation_degree(rel)))
                elif adv_type.is_numeric and adv_type is req_type:
                    if wanted.value is None:
                        raise RequestError(f"requested property {wanted.name!r} needs a numeric value")
                    entries.append((position[name], _NUMERIC, wanted.value))
                else:
                    entries.append((position[name], _INCOMPARABLE, 0.0))
            self._plan.append((wanted.weight, entries))
        self._total_weight = sum(p.weight for p in request.properties)

    def score(self, row: Sequence[AttributeValue]) -> float:
        total = 0.0
        for weight, entries in self._plan:
            best = 0.0
            for index, kind, payload in entries:
                value = row[index]
                if value.type is None:
                    degree = NULL_DEGREE
                elif kind == _NUMERIC:
                    degree = ratio_degree(value.value, payload)
                else:
                    degree = payload
                if degree > best:
                    best = degree
            total += best * weight
        return total / self._total_weight


def aggregate_match(tax: Taxonomy, request: ResourceRequest, resource: ResourceRecord) -> float:
    """Weighted aggregate of the best per-property degrees."""
    names = tuple(resource.values)
    row = tuple(resource.values[name] for name in names)
    for name, value in zip(names, row):
        _check_type(tax, name, value)
    return RequestScorer(tax, request, names).score(row)


def rank(results: Sequence[Tuple[str, float]]) -> List[MatchResult]:
    """Descending degree, ties by resource id; ranks 1..n."""
    ordered = sorted(results, key=lambda item: (-item[1], item[0]))
    return [
        MatchResult(resource=resource, degree=degree, rank=position)
        for position, (resource, degree) in enumerate(ordered, start=1)
    ]
