"""
Resource ontology: a rooted class tree with typed property definitions.

Properties are compared through the classes they are bound to. The four match
relations are Exact, PlugIn(d), Subsume(d) and NoMatch, where d is the number of
parent edges between the two classes.
"""

import logging
import re
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from ..errors import TaxonomyError, UnknownClassError, UnknownPropertyError
from ..models.values import ValueType

logger = logging.getLogger(__name__)

NAME_PATTERN = r"[A-Za-z_][A-Za-z0-9_.\-]*"

_CLASS_LINE = re.compile(rf"^class\s+({NAME_PATTERN})(?:\s+parent\s+({NAME_PATTERN}))?$")
_PROPERTY_LINE = re.compile(
    rf"^property\s+({NAME_PATTERN})\s+type\s+(\S+)\s+class\s+({NAME_PATTERN})$"
)


class ClassNode(BaseModel):
    """A concept of the taxonomy; ``parent`` is None only for the root."""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Unique class name")
    parent: Optional[str] = Field(None, description="Parent class name")


class PropertyDef(BaseModel):
    """A typed property annotating a class."""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Unique property name")
    value_type: ValueType = Field(..., description="Declared value type")
    concept: str = Field(..., description="Class the property is bound to")


class RelationKind(str, Enum):
    EXACT = "exact"
    PLUG_IN = "plug_in"
    SUBSUME = "subsume"
    NO_MATCH = "no_match"


class MatchRelation(BaseModel):
    """Relation between a requested and an advertised property."""
    model_config = ConfigDict(frozen=True)

    kind: RelationKind
    distance: Optional[int] = Field(None, description="Generation distance for PlugIn/Subsume")

    @model_validator(mode="after")
    def _check_distance(self) -> "MatchRelation":
        ranked = self.kind in (RelationKind.PLUG_IN, RelationKind.SUBSUME)
        if ranked and (self.distance is None or self.distance < 1):
            raise ValueError(f"{self.kind.value} needs a distance >= 1")
        if not ranked and self.distance is not None:
            raise ValueError(f"{self.kind.value} carries no distance")
        return self

    @classmethod
    def exact(cls) -> "MatchRelation":
        return cls(kind=RelationKind.EXACT)

    @classmethod
    def plug_in(cls, distance: int) -> "MatchRelation":
        return cls(kind=RelationKind.PLUG_IN, distance=distance)

    @classmethod
    def subsume(cls, distance: int) -> "MatchRelation":
        return cls(kind=RelationKind.SUBSUME, distance=distance)

    @classmethod
    def no_match(cls) -> "MatchRelation":
        return cls(kind=RelationKind.NO_MATCH)

    @property
    def is_match(self) -> bool:
        return self.kind is not RelationKind.NO_MATCH


class Taxonomy(BaseModel):
    """Immutable class tree plus property definitions; queries are memoized."""
    model_config = ConfigDict(frozen=True)

    root: str = Field(..., description="Root class name")
    classes: Dict[str, ClassNode] = Field(..., description="Classes by name")
    properties: Dict[str, PropertyDef] = Field(default_factory=dict, description="Properties by name")

    _ancestors: Dict[str, Dict[str, int]] = PrivateAttr(default_factory=dict)
    _relations: Dict[Tuple[str, str], MatchRelation] = PrivateAttr(default_factory=dict)
    _pruned: Dict[Tuple[Tuple[str, ...], frozenset], Tuple[str, ...]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_tree(self) -> "Taxonomy":
        roots = [c.name for c in self.classes.values() if c.parent is None]
        if roots != [self.root]:
            raise ValueError(f"taxonomy needs exactly one root, found {roots}")
        for node in self.classes.values():
            if node.parent is not None and node.parent not in self.classes:
                raise ValueError(f"class {node.name!r} has unknown parent {node.parent!r}")
        for prop in self.properties.values():
            if prop.concept not in self.classes:
                raise ValueError(f"property {prop.name!r} is bound to unknown class {prop.concept!r}")
        if _find_cycle(self.classes) is not None:
            raise ValueError("class hierarchy contains a cycle")
        for name in self.classes:
            chain, node, distance = {}, name, 0
            while node is not None:
                chain[node] = distance
                node = self.classes[node].parent
                distance += 1
            self._ancestors[name] = chain
        return self

    def node(self, name: Union[str, ClassNode]) -> ClassNode:
        key = name.name if isinstance(name, ClassNode) else name
        try:
            return self.classes[key]
        except KeyError:
            raise UnknownClassError(key) from None

    def property(self, name: str) -> PropertyDef:
        try:
            return self.properties[name]
        except KeyError:
            raise UnknownPropertyError(name) from None

    def depth(self, name: Union[str, ClassNode]) -> int:
        return len(self._ancestors[self.node(name).name]) - 1

    def property_names(self) -> List[str]:
        return list(self.properties)

    def generation_distance(self, ancestor: Union[str, ClassNode], descendant: Union[str, ClassNode]) -> Optional[int]:
        upper, lower = self.node(ancestor).name, self.node(descendant).name
        return self._ancestors[lower].get(upper)

    def relation(self, requested: str, advertised: str) -> MatchRelation:
        key = (requested, advertised)
        cached = self._relations.get(key)
        if cached is not None:
            return cached
        wanted, offered = self.property(requested).concept, self.property(advertised).concept
        if wanted == offered:
            result = MatchRelation.exact()
        else:
            up = self._ancestors[wanted].get(offered)
            down = self._ancestors[offered].get(wanted)
            if up is not None:
                result = MatchRelation.plug_in(up)
            elif down is not None:
                result = MatchRelation.subsume(down)
            else:
                result = MatchRelation.no_match()
        self._relations[key] = result
        return result

    def prune_irrelevant(self, advertised: Iterable[str], requested: Iterable[str]) -> Tuple[str, ...]:
        offered, wanted = tuple(advertised), frozenset(requested)
        key = (offered, wanted)
        cached = self._pruned.get(key)
        if cached is not None:
            return cached
        for name in wanted:
            self.property(name)
        kept = tuple(
            name for name in offered
            if any(self.relation(r, name).is_match for r in wanted)
        )
        self._pruned[key] = kept
        return kept


def _find_cycle(classes: Dict[str, ClassNode]) -> Optional[str]:
    """Name of a class whose parent chain loops, or None."""
    for start in classes:
        seen, node = set(), start
        while node is not None and node in classes:
            if node in seen:
                return start
            seen.add(node)
            node = classes[node].parent
    return None


def parse_taxonomy(text: str, source: Optional[str] = None) -> Taxonomy:
    """Parse the line-oriented taxonomy format; errors carry line numbers."""
    classes: Dict[str, ClassNode] = {}
    properties: Dict[str, PropertyDef] = {}
    class_lines: Dict[str, int] = {}
    property_lines: Dict[str, int] = {}
    root: Optional[str] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _CLASS_LINE.match(line)
        if match:
            name, parent = match.groups()
            if name in classes:
                raise TaxonomyError(f"duplicate class {name!r}", number, source)
            if parent is None:
                if root is not None:
                    raise TaxonomyError(f"second root class {name!r} (root is {root!r})", number, source)
                root = name
            classes[name] = ClassNode(name=name, parent=parent)
            class_lines[name] = number
            continue
        match = _PROPERTY_LINE.match(line)
        if match:
            name, type_name, concept = match.groups()
            if name in properties:
                raise TaxonomyError(f"duplicate property {name!r}", number, source)
            try:
                value_type = ValueType(type_name)
            except ValueError:
                raise TaxonomyError(f"unknown value type {type_name!r}", number, source) from None
            properties[name] = PropertyDef(name=name, value_type=value_type, concept=concept)
            property_lines[name] = number
            continue
        raise TaxonomyError(f"cannot parse {line!r}", number, source)

    for name, node in classes.items():
        if node.parent is not None and node.parent not in classes:
            raise TaxonomyError(f"class {name!r} has unknown parent {node.parent!r}", class_lines[name], source)
    looping = _find_cycle(classes)
    if looping is not None:
        raise TaxonomyError(f"class {looping!r} is part of a parent cycle", class_lines[looping], source)
    if root is None:
        raise TaxonomyError("taxonomy has no root class", None, source or "<input>")
    for name, prop in properties.items():
        if prop.concept not in classes:
            raise TaxonomyError(f"property {name!r} bound to unknown class {prop.concept!r}", property_lines[name], source)

    taxonomy = Taxonomy(root=root, classes=classes, properties=properties)
    logger.debug("Parsed taxonomy with %d classes and %d properties", len(classes), len(properties))
    return taxonomy


def load_taxonomy(source: Union[str, Path]) -> Taxonomy:
    """Load a taxonomy document from disk."""
    path = Path(source)
    taxonomy = parse_taxonomy(path.read_text(encoding="utf-8"), str(path))
    logger.info("Loaded taxonomy %s (%d classes, %d properties)", path, len(taxonomy.classes), len(taxonomy.properties))
    return taxonomy


def generation_distance(tax: Taxonomy, ancestor: Union[str, ClassNode], descendant: Union[str, ClassNode]) -> Optional[int]:
    """Parent edges from ``descendant`` up to ``ancestor``; None when not on its root path."""
    return tax.generation_distance(ancestor, descendant)


def relation(tax: Taxonomy, requested: str, advertised: str) -> MatchRelation:
    """Exact, PlugIn(d) (advertised class is an ancestor), Subsume(d) or NoMatch."""
    return tax.relation(requested, advertised)


def prune_irrelevant(tax: Taxonomy, advertised: Iterable[str], requested: Iterable[str]) -> Tuple[str, ...]:
    """Advertised properties related to at least one requested property, in advertised order."""
    return tax.prune_irrelevant(advertised, requested)
