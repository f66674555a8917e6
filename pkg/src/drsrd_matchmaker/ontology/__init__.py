"""
Resource ontology template and property match relations.
"""

from .taxonomy import (
    ClassNode,
    MatchRelation,
    PropertyDef,
    RelationKind,
    Taxonomy,
    generation_distance,
    load_taxonomy,
    parse_taxonomy,
    prune_irrelevant,
    relation,
)

__all__ = [
    "ClassNode", "PropertyDef", "Taxonomy", "MatchRelation", "RelationKind",
    "load_taxonomy", "parse_taxonomy", "generation_distance", "relation", "prune_irrelevant",
]
