"""
Information tables and classical rough-set operations.
"""

import itertools

import numpy as np
import pytest

from drsrd_matchmaker.errors import RoughSetError, UnknownAttributeError, UnknownObjectError
from drsrd_matchmaker.models.values import AttributeValue
from drsrd_matchmaker.rough.table import (
    InformationTable,
    dependency_degree,
    lower_approx,
    partition,
    positive_region,
    reduce_dependent_attributes,
    upper_approx,
)

ORACLE_CASES = 1000


def brute_class(table, attrs, x):
    key = [table.value(x, a).key for a in attrs]
    return {y for y in table.objects if [table.value(y, a).key for a in attrs] == key}


def brute_lower(table, attrs, target):
    return {x for x in table.objects if brute_class(table, attrs, x) <= set(target)}


def brute_upper(table, attrs, target):
    return {x for x in table.objects if brute_class(table, attrs, x) & set(target)}


def brute_positive(table, condition, decision):
    region = set()
    for x in table.objects:
        region |= brute_lower(table, condition, brute_class(table, decision, x))
    return region


def random_subset(rng, objects):
    return {obj for obj in objects if rng.random() < 0.5}


def random_attrs(rng, attributes):
    count = int(rng.integers(1, len(attributes) + 1))
    return [str(a) for a in rng.choice(list(attributes), size=count, replace=False)]


def test_partition_groups_equal_values(six_table):
    blocks = partition(six_table, ["a"]).as_sets()
    assert blocks == {frozenset({"u1", "u2"}), frozenset({"u3", "u4"}), frozenset({"u5", "u6"})}


def test_partition_of_distinct_rows_is_singletons(make_table):
    table = make_table({"a": [1, 2, 3, 4]})
    assert all(len(block) == 1 for block in partition(table, ["a"]).blocks)


def test_partition_of_equal_rows_is_universe(make_table):
    table = make_table({"a": [7, 7, 7], "b": [1, 1, 1]})
    assert partition(table, ["a", "b"]).as_sets() == {table.universe}


def test_null_agrees_only_with_null(make_table):
    table = make_table({"a": [None, None, 0]})
    assert partition(table, ["a"]).as_sets() == {frozenset({"u1", "u2"}), frozenset({"u3"})}


def test_int_and_long_with_equal_payload_differ():
    table = InformationTable(
        objects=("x", "y"),
        attributes=("a",),
        rows={"x": (AttributeValue.int_(1),), "y": (AttributeValue.long(1),)},
    )
    assert len(partition(table, ["a"]).blocks) == 2


def test_partition_unknown_attribute(six_table):
    with pytest.raises(UnknownAttributeError, match="zz"):
        partition(six_table, ["zz"])


def test_partition_empty_attribute_set(six_table):
    with pytest.raises(RoughSetError):
        partition(six_table, [])


def test_lower_and_upper_approximation(six_table):
    target = {"u1", "u2", "u3"}
    assert lower_approx(six_table, ["a"], target) == {"u1", "u2"}
    assert upper_approx(six_table, ["a"], target) == {"u1", "u2", "u3", "u4"}


@pytest.mark.parametrize("approx", [lower_approx, upper_approx])
def test_approximation_of_universe_and_empty_set(six_table, approx):
    assert approx(six_table, ["a"], six_table.objects) == six_table.universe
    assert approx(six_table, ["a"], set()) == frozenset()


def test_approximation_rejects_unknown_object(six_table):
    with pytest.raises(UnknownObjectError, match="u9"):
        lower_approx(six_table, ["a"], {"u1", "u9"})


def test_positive_region_of_self_dependency(six_table):
    assert positive_region(six_table, ["a"], ["a"]) == six_table.universe


def test_dependency_degree_total_and_partial(make_table):
    table = make_table({"a": [1, 1, 2, 2], "b": [1, 2, 3, 3], "c": [1, 1, 1, 2]})
    assert dependency_degree(table, ["a"], ["a"]) == 1.0
    # b refines a
    assert dependency_degree(table, ["b"], ["a"]) == 1.0
    # only the {u1,u2} block of a sits inside a class of c
    assert dependency_degree(table, ["a"], ["c"]) == 0.5


def test_dependency_degree_empty_universe(make_table):
    table = make_table({"a": []})
    with pytest.raises(RoughSetError):
        dependency_degree(table, ["a"], ["a"])


def test_reduce_drops_later_duplicate_column(make_table):
    table = make_table({"a": [1, 2, 3, 1], "b": [1, 2, 3, 1]})
    assert reduce_dependent_attributes(table, ["a", "b"]) == ("a",)


def test_reduce_keeps_independent_attributes(make_table):
    table = make_table({"a": [1, 1, 2, 2], "b": [1, 2, 1, 2]})
    assert reduce_dependent_attributes(table, ["a", "b"]) == ("a", "b")


def test_reduce_drops_constant_attribute(make_table):
    table = make_table({"a": [1, 2, 3], "k": [0, 0, 0]})
    assert reduce_dependent_attributes(table, ["a", "k"]) == ("a",)


def test_reduce_needs_two_attributes(six_table):
    with pytest.raises(RoughSetError):
        reduce_dependent_attributes(six_table, ["a"])


def test_from_cells_fills_missing_with_null():
    table = InformationTable.from_cells(["x", "y"], ["a"], {"x": {"a": AttributeValue.text("on")}})
    assert table.value("y", "a").is_null
    assert table.value("x", "a") == AttributeValue.text("on")


def test_table_rejects_short_rows():
    with pytest.raises(ValueError):
        InformationTable(objects=("x",), attributes=("a", "b"), rows={"x": (AttributeValue.int_(1),)})


def test_operations_match_brute_force(random_table):
    rng = np.random.default_rng(20240601)
    for _ in range(ORACLE_CASES):
        table = random_table(rng)
        attrs = random_attrs(rng, table.attributes)
        target = random_subset(rng, table.objects)

        blocks = partition(table, attrs).block_sets
        assert sum(len(b) for b in blocks) == len(table.objects)
        assert set().union(*blocks) == set(table.objects)
        for x in table.objects:
            assert partition(table, attrs).block_of(x) == brute_class(table, attrs, x)

        lower = lower_approx(table, attrs, target)
        upper = upper_approx(table, attrs, target)
        assert lower == brute_lower(table, attrs, target)
        assert upper == brute_upper(table, attrs, target)
        assert lower <= target <= upper
        assert upper == table.universe - lower_approx(table, attrs, table.universe - target)

        decision = random_attrs(rng, table.attributes)
        assert positive_region(table, attrs, decision) == brute_positive(table, attrs, decision)
        if table.objects:
            expected = len(brute_positive(table, attrs, decision)) / len(table.objects)
            assert dependency_degree(table, attrs, decision) == pytest.approx(expected, abs=1e-12)


def test_more_attributes_refine_approximations(random_table):
    rng = np.random.default_rng(11)
    for _ in range(200):
        table = random_table(rng, max_attributes=4)
        if len(table.attributes) < 2:
            continue
        target = random_subset(rng, table.objects)
        for size in range(1, len(table.attributes)):
            for fewer in itertools.combinations(table.attributes, size):
                more = table.attributes
                assert lower_approx(table, fewer, target) <= lower_approx(table, more, target)
                assert upper_approx(table, more, target) <= upper_approx(table, fewer, target)


def test_reduction_is_deterministic_and_keeps_positive_regions(random_table):
    rng = np.random.default_rng(5)
    for _ in range(200):
        table = random_table(rng, max_attributes=4)
        if len(table.attributes) < 2:
            continue
        kept = reduce_dependent_attributes(table, table.attributes)
        assert kept == reduce_dependent_attributes(table, table.attributes)
        assert kept
        for dropped in set(table.attributes) - set(kept):
            assert positive_region(table, kept, [dropped]) == table.universe
