"""
Synthetic repository and request generation.
"""

import math

import pytest

from drsrd_matchmaker.errors import ExperimentError
from drsrd_matchmaker.models.experiment import GeneratorConfig
from drsrd_matchmaker.ontology.taxonomy import parse_taxonomy
from drsrd_matchmaker.simbench.generator import (
    MAX_REQUESTED,
    MIN_REQUESTED,
    generate_queries,
    generate_resources,
    value_domain,
)


def config(**overrides):
    settings = {"resource_count": 50, "certainty": 0.5, "query_count": 10, "seed": 7}
    settings.update(overrides)
    return GeneratorConfig(**settings)


def all_values(repo):
    return [value for record in repo.records for value in record.values.values()]


def test_truth_is_complete_and_typed(grid_taxonomy):
    truth, masked = generate_resources(grid_taxonomy, config())
    assert len(truth) == len(masked) == 50
    assert truth.ids == masked.ids
    for record in truth.records:
        assert set(record.values) == set(grid_taxonomy.property_names())
        for name, value in record.values.items():
            assert not value.is_null
            assert value.type is grid_taxonomy.property(name).value_type
            assert value in value_domain(grid_taxonomy, name)


def test_masked_values_are_null_or_truth(grid_taxonomy):
    truth, masked = generate_resources(grid_taxonomy, config())
    for real, seen in zip(truth.records, masked.records):
        for name, value in seen.values.items():
            assert value.is_null or value == real.values[name]


def test_full_certainty_masks_nothing(grid_taxonomy):
    truth, masked = generate_resources(grid_taxonomy, config(certainty=1.0))
    assert truth.records == masked.records


def test_zero_certainty_masks_everything(grid_taxonomy):
    _, masked = generate_resources(grid_taxonomy, config(certainty=0.0))
    assert all(value.is_null for value in all_values(masked))


def test_null_fraction_tracks_certainty(grid_taxonomy):
    _, masked = generate_resources(grid_taxonomy, config(resource_count=1000))
    values = all_values(masked)
    nulls = sum(value.is_null for value in values)
    sigma = math.sqrt(len(values) * 0.5 * 0.5)
    assert abs(nulls - 0.5 * len(values)) <= 3 * sigma


def test_resource_ids_are_padded_and_ordered(grid_taxonomy):
    truth, _ = generate_resources(grid_taxonomy, config(resource_count=12))
    assert truth.ids[0] == "R01" and truth.ids[-1] == "R12"
    assert truth.ids == sorted(truth.ids)


def test_generation_is_deterministic(grid_taxonomy):
    assert generate_resources(grid_taxonomy, config()) == generate_resources(grid_taxonomy, config())
    assert generate_queries(grid_taxonomy, config()) == generate_queries(grid_taxonomy, config())
    assert generate_resources(grid_taxonomy, config(seed=8))[0] != generate_resources(grid_taxonomy, config())[0]


def test_masking_does_not_change_values(grid_taxonomy):
    # value draws and the mask use separate streams
    low, _ = generate_resources(grid_taxonomy, config(certainty=0.2))
    high, _ = generate_resources(grid_taxonomy, config(certainty=0.9))
    assert low == high


def test_queries_shape(grid_taxonomy):
    queries = generate_queries(grid_taxonomy, config(query_count=200))
    assert len(queries) == 200
    names = set(grid_taxonomy.property_names())
    for query in queries:
        assert MIN_REQUESTED <= len(query.properties) <= MAX_REQUESTED
        assert len(set(query.names)) == len(query.names)
        assert set(query.names) <= names
        for wanted in query.properties:
            assert 0.0 < wanted.weight <= 1.0
            assert round(wanted.weight * 10) == pytest.approx(wanted.weight * 10)
            numeric = grid_taxonomy.property(wanted.name).value_type.is_numeric
            assert (wanted.value is not None) == numeric


def test_no_queries(grid_taxonomy):
    assert generate_queries(grid_taxonomy, config(query_count=0)) == []


def test_small_taxonomy_limits_request_size():
    tax = parse_taxonomy("class A\nproperty p type text class A\n")
    queries = generate_queries(tax, config(query_count=5))
    assert all(query.names == ["p"] for query in queries)


def test_taxonomy_without_properties():
    tax = parse_taxonomy("class A\n")
    with pytest.raises(ExperimentError, match="no properties"):
        generate_queries(tax, config())
    assert generate_queries(tax, config(query_count=0)) == []


def test_config_bounds():
    with pytest.raises(ValueError):
        config(certainty=1.5)
    with pytest.raises(ValueError):
        config(resource_count=0)
