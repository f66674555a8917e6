"""
Property match degrees, aggregate match and ranking.
"""

import numpy as np
import pytest

from drsrd_matchmaker.errors import RequestError, ValueTypeError
from drsrd_matchmaker.matching.matchmaker import (
    RequestScorer,
    aggregate_match,
    property_match_degree,
    rank,
    ratio_degree,
    relation_degree,
)
from drsrd_matchmaker.models.request import ResourceRequest, WeightedProperty
from drsrd_matchmaker.models.resource import ResourceRecord
from drsrd_matchmaker.models.values import NULL, AttributeValue
from drsrd_matchmaker.ontology.taxonomy import MatchRelation

TOL = 1e-12


def request(*items):
    return ResourceRequest(
        properties=tuple(WeightedProperty(name=n, weight=w, value=v) for n, w, v in items)
    )


def test_exact_text_match(layered_taxonomy):
    degree = property_match_degree(layered_taxonomy, ("os", AttributeValue.text("Linux")), ("os", None))
    assert degree == pytest.approx(1.0, abs=TOL)


def test_plug_in_three_generations(layered_taxonomy):
    degree = property_match_degree(layered_taxonomy, ("kind", AttributeValue.text("Cluster")), ("cpu_model", None))
    assert degree == pytest.approx(0.8, abs=TOL)


def test_subsume_two_generations(layered_taxonomy):
    degree = property_match_degree(layered_taxonomy, ("cpu_model", AttributeValue.text("Xeon")), ("hardware", None))
    assert degree == pytest.approx(0.7, abs=TOL)


def test_numeric_ratio_two(layered_taxonomy):
    degree = property_match_degree(layered_taxonomy, ("cpu_speed", AttributeValue.real(200.0)), ("cpu_speed", 100.0))
    assert degree == pytest.approx(0.8, abs=TOL)


def test_numeric_ratio_above_five(layered_taxonomy):
    degree = property_match_degree(layered_taxonomy, ("cpu_speed", AttributeValue.real(600.0)), ("cpu_speed", 100.0))
    assert degree == pytest.approx(0.5, abs=TOL)


def test_advertised_null(layered_taxonomy):
    assert property_match_degree(layered_taxonomy, ("os", NULL), ("os", None)) == pytest.approx(0.5, abs=TOL)


def test_null_on_unrelated_property_scores_zero(layered_taxonomy):
    assert property_match_degree(layered_taxonomy, ("bandwidth", NULL), ("os", None)) == 0.0


def test_no_match_and_incomparable_types(layered_taxonomy):
    assert property_match_degree(layered_taxonomy, ("os", AttributeValue.text("Linux")), ("cpu_model", None)) == 0.0
    # same class, int against long
    degree = property_match_degree(layered_taxonomy, ("cpu_cache", AttributeValue.long(4)), ("cpu_cores", 4))
    assert degree == 0.0
    # same class, text against real
    degree = property_match_degree(layered_taxonomy, ("cpu_model", AttributeValue.text("Xeon")), ("cpu_speed", 2.0))
    assert degree == 0.0


def test_numeric_comparison_needs_positive_value(layered_taxonomy):
    with pytest.raises(RequestError):
        property_match_degree(layered_taxonomy, ("cpu_speed", AttributeValue.real(2.0)), ("cpu_speed", None))
    with pytest.raises(RequestError):
        property_match_degree(layered_taxonomy, ("cpu_speed", AttributeValue.real(2.0)), ("cpu_speed", 0))


def test_advertised_value_of_wrong_type(layered_taxonomy):
    with pytest.raises(ValueTypeError):
        property_match_degree(layered_taxonomy, ("os", AttributeValue.int_(3)), ("os", None))


@pytest.mark.parametrize(
    "rel, expected",
    [
        (MatchRelation.exact(), 1.0),
        (MatchRelation.plug_in(1), 1.0),
        (MatchRelation.plug_in(2), 0.9),
        (MatchRelation.plug_in(5), 0.6),
        (MatchRelation.plug_in(6), 0.5),
        (MatchRelation.subsume(1), 0.8),
        (MatchRelation.subsume(3), 0.6),
        (MatchRelation.subsume(4), 0.5),
        (MatchRelation.no_match(), 0.0),
    ],
)
def test_relation_degree_table(rel, expected):
    assert relation_degree(rel) == pytest.approx(expected, abs=TOL)


def test_relation_degree_weakly_decreases_with_distance():
    plug = [relation_degree(MatchRelation.plug_in(d)) for d in range(1, 10)]
    sub = [relation_degree(MatchRelation.subsume(d)) for d in range(1, 10)]
    assert plug == sorted(plug, reverse=True)
    assert sub == sorted(sub, reverse=True)
    assert all(0.5 <= d <= 1.0 for d in plug + sub)


def test_ratio_degree_below_one_is_literal():
    assert ratio_degree(1, 1) == pytest.approx(0.9, abs=TOL)
    assert ratio_degree(1, 4) == pytest.approx(0.975, abs=TOL)
    assert ratio_degree(5, 1) == pytest.approx(0.5, abs=TOL)


def test_aggregate_weighted_mean(layered_taxonomy):
    record = ResourceRecord(id="r1", values={"os": AttributeValue.text("Linux"), "bandwidth": NULL})
    req = request(("os", 1.0, None), ("bandwidth", 0.5, 100.0))
    assert aggregate_match(layered_taxonomy, req, record) == pytest.approx(1.25 / 1.5, abs=TOL)


def test_aggregate_takes_best_advertised_property(layered_taxonomy):
    record = ResourceRecord(
        id="r1",
        values={"kind": AttributeValue.text("Grid"), "cpu_model": AttributeValue.text("Xeon")},
    )
    assert aggregate_match(layered_taxonomy, request(("cpu_model", 0.7, None)), record) == pytest.approx(1.0)


def test_aggregate_all_ones_and_all_zeros(layered_taxonomy):
    record = ResourceRecord(id="r1", values={"os": AttributeValue.text("Linux"), "distro": AttributeValue.text("Debian")})
    assert aggregate_match(layered_taxonomy, request(("os", 0.2, None), ("distro", 0.9, None)), record) == 1.0
    assert aggregate_match(layered_taxonomy, request(("bandwidth", 0.4, 10.0), ("cpu_model", 1.0, None)), record) == 0.0


def test_rank_orders_by_degree_then_id():
    ranked = rank([("b", 0.9), ("a", 0.9), ("c", 0.5)])
    assert [(r.resource, r.rank) for r in ranked] == [("a", 1), ("b", 2), ("c", 3)]
    assert [r.rank for r in rank([("z", 0.1)])] == [1]
    assert rank([]) == []


def _random_instance(rng, tax):
    names = tax.property_names()
    values = {}
    for name in names:
        if rng.random() < 0.3:
            continue
        kind = tax.property(name).value_type
        if rng.random() < 0.2:
            values[name] = NULL
        elif kind.value == "text":
            values[name] = AttributeValue.text(f"v{int(rng.integers(3))}")
        elif kind.value == "real":
            values[name] = AttributeValue.real(float(rng.integers(1, 50)) / 4)
        else:
            values[name] = AttributeValue.of(kind, int(rng.integers(1, 64)))
    size = int(rng.integers(1, 5))
    chosen = [str(n) for n in rng.choice(names, size=size, replace=False)]
    items = []
    for name in chosen:
        numeric = tax.property(name).value_type.is_numeric
        weight = int(rng.integers(1, 11)) / 10
        items.append((name, weight, float(rng.integers(1, 40)) if numeric else None))
    return ResourceRecord(id="r", values=values), items


def test_aggregate_scale_invariance(layered_taxonomy):
    rng = np.random.default_rng(8)
    for _ in range(1000):
        record, items = _random_instance(rng, layered_taxonomy)
        base = request(*items)
        factor = float(rng.uniform(0.05, 1.0))
        scaled = base.scaled(factor)
        assert aggregate_match(layered_taxonomy, scaled, record) == pytest.approx(
            aggregate_match(layered_taxonomy, base, record), abs=1e-9
        )


def test_aggregate_monotone_in_property_degree(layered_taxonomy):
    rng = np.random.default_rng(13)
    for _ in range(1000):
        record, items = _random_instance(rng, layered_taxonomy)
        req = request(*items)
        before = aggregate_match(layered_taxonomy, req, record)
        improved = dict(record.values)
        absent = [n for n in layered_taxonomy.property_names() if n not in record.values]
        numeric = [n for n, v in record.values.items() if not v.is_null and v.type.is_numeric]
        if absent and (not numeric or rng.random() < 0.5):
            # one more advertised property can only add candidates to each maximum
            name = absent[int(rng.integers(len(absent)))]
            kind = layered_taxonomy.property(name).value_type
            improved[name] = AttributeValue.text("extra") if kind.value == "text" else AttributeValue.of(kind, 3)
        elif numeric:
            # a smaller advertised value lowers every ratio it enters
            name = numeric[int(rng.integers(len(numeric)))]
            value = record.values[name]
            smaller = value.value / 2 if value.type.value == "real" else max(1, value.value // 2)
            improved[name] = AttributeValue.of(value.type, smaller)
        else:
            continue
        after = aggregate_match(layered_taxonomy, req, ResourceRecord(id="r", values=improved))
        assert after >= before - 1e-12


def test_scorer_matches_aggregate(layered_taxonomy):
    rng = np.random.default_rng(21)
    names = layered_taxonomy.property_names()
    for _ in range(200):
        record, items = _random_instance(rng, layered_taxonomy)
        req = request(*items)
        scorer = RequestScorer(layered_taxonomy, req, names)
        row = tuple(record.value(name) for name in names)
        full = ResourceRecord(id="r", values=dict(zip(names, row)))
        assert scorer.score(row) == pytest.approx(aggregate_match(layered_taxonomy, req, full), abs=TOL)
