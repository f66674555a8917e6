"""
Information tables and classical rough-set operations.

An InformationTable is the universe U of resource objects described by attributes
P. All operations here are pure; the table memoizes partitions per attribute set.
"""

import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from ..errors import RoughSetError, UnknownAttributeError, UnknownObjectError
from ..models.values import NULL, AttributeValue

logger = logging.getLogger(__name__)

ObjectSet = FrozenSet[str]


class Partition(BaseModel):
    """Equivalence classes of a universe, blocks in first-appearance order."""
    model_config = ConfigDict(frozen=True)

    blocks: Tuple[Tuple[str, ...], ...] = Field(..., description="Pairwise-disjoint non-empty blocks")
    _block_of: Dict[str, FrozenSet[str]] = PrivateAttr(default_factory=dict)
    _sets: Tuple[FrozenSet[str], ...] = PrivateAttr(default=())

    @model_validator(mode="after")
    def _check_blocks(self) -> "Partition":
        seen = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks are non-empty")
            for obj in block:
                if obj in seen:
                    raise ValueError(f"object {obj!r} appears in two blocks")
                seen.add(obj)
        return self

    def model_post_init(self, __context) -> None:
        self._sets = tuple(frozenset(block) for block in self.blocks)
        self._block_of = {obj: members for members in self._sets for obj in members}

    @property
    def block_sets(self) -> Tuple[FrozenSet[str], ...]:
        return self._sets

    def block_of(self, obj: str) -> FrozenSet[str]:
        """The equivalence class [obj]."""
        try:
            return self._block_of[obj]
        except KeyError:
            raise UnknownObjectError(obj) from None

    def as_sets(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(self._sets)


class InformationTable(BaseModel):
    """A = (U, P): objects x attributes with exactly one value per cell."""
    model_config = ConfigDict(frozen=True)

    objects: Tuple[str, ...] = Field(..., description="Universe U in insertion order")
    attributes: Tuple[str, ...] = Field(..., description="Attributes P in insertion order")
    rows: Dict[str, Tuple[AttributeValue, ...]] = Field(..., description="Row of values per object")

    _attr_index: Dict[str, int] = PrivateAttr(default_factory=dict)
    _universe: FrozenSet[str] = PrivateAttr(default=frozenset())
    _partitions: Dict[Tuple[str, ...], Partition] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_shape(self) -> "InformationTable":
        for label, names in (("object", self.objects), ("attribute", self.attributes)):
            if any(not name for name in names):
                raise ValueError(f"{label} identifiers are non-empty")
            if len(set(names)) != len(names):
                raise ValueError(f"{label} identifiers are unique")
        if set(self.rows) != set(self.objects):
            raise ValueError("rows must cover exactly the objects")
        width = len(self.attributes)
        for obj, row in self.rows.items():
            if len(row) != width:
                raise ValueError(f"row {obj!r} has {len(row)} values for {width} attributes")
        return self

    def model_post_init(self, __context) -> None:
        self._attr_index = {name: i for i, name in enumerate(self.attributes)}
        self._universe = frozenset(self.objects)

    @classmethod
    def from_cells(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        cells: Mapping[str, Mapping[str, AttributeValue]],
    ) -> "InformationTable":
        """Build a table from per-object mappings; missing cells become Null."""
        rows = {
            obj: tuple(cells.get(obj, {}).get(attr, NULL) for attr in attributes)
            for obj in objects
        }
        return cls(objects=tuple(objects), attributes=tuple(attributes), rows=rows)

    @property
    def universe(self) -> ObjectSet:
        return self._universe

    def value(self, obj: str, attr: str) -> AttributeValue:
        return self.row(obj)[self.attribute_index(attr)]

    def row(self, obj: str) -> Tuple[AttributeValue, ...]:
        try:
            return self.rows[obj]
        except KeyError:
            raise UnknownObjectError(obj) from None

    def attribute_index(self, attr: str) -> int:
        try:
            return self._attr_index[attr]
        except KeyError:
            raise UnknownAttributeError(attr) from None

    def has_attribute(self, attr: str) -> bool:
        return attr in self._attr_index

    def ordered(self, objs: Iterable[str]) -> Tuple[str, ...]:
        """Objects of ``objs`` in universe order."""
        members = set(objs)
        return tuple(obj for obj in self.objects if obj in members)

    def check_objects(self, objs: Iterable[str]) -> ObjectSet:
        members = frozenset(objs)
        for obj in members:
            if obj not in self._universe:
                raise UnknownObjectError(obj)
        return members

    def canonical_attributes(self, attrs: Iterable[str]) -> Tuple[str, ...]:
        """Validate ``attrs`` and return them in table order."""
        wanted = set(attrs)
        if not wanted:
            raise RoughSetError("attribute set must be non-empty")
        for attr in wanted:
            if attr not in self._attr_index:
                raise UnknownAttributeError(attr)
        return tuple(a for a in self.attributes if a in wanted)

    def partition(self, attrs: Iterable[str]) -> Partition:
        key = self.canonical_attributes(attrs)
        cached = self._partitions.get(key)
        if cached is not None:
            return cached
        indices = [self._attr_index[a] for a in key]
        groups: Dict[tuple, List[str]] = {}
        for obj in self.objects:
            row = self.rows[obj]
            groups.setdefault(tuple(row[i].key for i in indices), []).append(obj)
        result = Partition(blocks=tuple(tuple(members) for members in groups.values()))
        self._partitions[key] = result
        return result


def partition(table: InformationTable, attrs: Iterable[str]) -> Partition:
    """Objects share a block iff they agree on every attribute in ``attrs``."""
    return table.partition(attrs)


def lower_approx(table: InformationTable, attrs: Iterable[str], target: Iterable[str]) -> ObjectSet:
    """{x : [x] is contained in target}."""
    members = table.check_objects(target)
    blocks = table.partition(attrs).block_sets
    return frozenset(obj for block in blocks if block <= members for obj in block)


def upper_approx(table: InformationTable, attrs: Iterable[str], target: Iterable[str]) -> ObjectSet:
    """{x : [x] meets target}."""
    members = table.check_objects(target)
    blocks = table.partition(attrs).block_sets
    return frozenset(obj for block in blocks if not block.isdisjoint(members) for obj in block)


def positive_region(table: InformationTable, condition: Iterable[str], decision: Iterable[str]) -> ObjectSet:
    """POS_C(D): union of the C-lower approximations of every D-class."""
    condition = table.canonical_attributes(condition)
    decision = table.canonical_attributes(decision)
    region = set()
    for block in table.partition(decision).block_sets:
        region |= lower_approx(table, condition, block)
    return frozenset(region)


def dependency_degree(table: InformationTable, condition: Iterable[str], decision: Iterable[str]) -> float:
    """gamma(C, D) = |POS_C(D)| / |U|; 1.0 iff D totally depends on C."""
    if not table.objects:
        raise RoughSetError("dependency degree is undefined on an empty universe")
    region = positive_region(table, condition, decision)
    return float(Fraction(len(region), len(table.objects)))


def reduce_dependent_attributes(table: InformationTable, attrs: Iterable[str]) -> Tuple[str, ...]:
    """
    Greedy single pass removing attributes that the remaining ones determine.

    Attributes are tested from the last to the first in table order, so of two
    duplicate columns the later one is dropped. Not a minimal reduct.
    """
    ordered = table.canonical_attributes(attrs)
    if len(ordered) < 2:
        raise RoughSetError("reduction needs at least two attributes")
    if not table.objects:
        return ordered

    dropped = set()
    for attr in reversed(ordered):
        rest = [a for a in ordered if a != attr and a not in dropped]
        if rest and dependency_degree(table, rest, [attr]) == 1.0:
            logger.debug("Dropping dependent attribute %s", attr)
            dropped.add(attr)
    return tuple(a for a in ordered if a not in dropped)
