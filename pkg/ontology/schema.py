"""The built-in UTO schema: concepts, relations and vocabulary alignments.

Everything is declared in settings/uto.yaml and turned into immutable
definitions here. ``load_schema`` is cached, so every caller shares the same
schema value.
"""
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from types import MappingProxyType
from typing import Optional, Tuple

from rdflib import URIRef

from store.namespaces import expand_curie
from utils.load import load_mappings_from_yaml

CONCEPT_NAMES = ('Tagging', 'Tag', 'Tagger', 'Object', 'Source', 'Comment', 'Date', 'Vote')
VALUE_TYPES = ('string', 'integer', 'date', 'none')


class SchemaError(ValueError):
    pass


class AlignmentKind(Enum):
    EQUIVALENT = 'Equivalent'
    SUB_OF = 'SubOf'
    SUPER_OF = 'SuperOf'

    def flipped(self):
        if self is AlignmentKind.SUB_OF:
            return AlignmentKind.SUPER_OF
        if self is AlignmentKind.SUPER_OF:
            return AlignmentKind.SUB_OF
        return self


@dataclass(frozen=True)
class ConceptDef:
    name: str
    synonyms: Tuple[str, ...]
    value_type: str
    description: str
    owl_comment: str = ''
    union_of: Tuple[URIRef, ...] = ()


@dataclass(frozen=True)
class RelationDef:
    name: str
    domain: str
    range: str
    exactly_one: bool = False
    transitive: bool = False
    symmetric: bool = False
    inverse_name: Optional[str] = None
    inverse_functional: bool = False
    hub_projection: bool = False
    forward: bool = True
    # rdfs:domain in the OWL export when it differs from the domain used for hub projection
    owl_domain: Optional[str] = None


@dataclass(frozen=True)
class AlignmentEntry:
    uto_term: str
    external_iri: URIRef
    kind: AlignmentKind
    in_owl: bool = True


@dataclass(frozen=True)
class UtoSchema:
    concepts: Tuple[ConceptDef, ...]
    relations: Tuple[RelationDef, ...]
    alignments: Tuple[AlignmentEntry, ...]
    base_namespace: str
    _by_name: MappingProxyType = field(init=False, repr=False, compare=False)
    _by_external: MappingProxyType = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_name = {concept.name: concept for concept in self.concepts}
        by_name.update({relation.name: relation for relation in self.relations})
        by_external = {}
        for entry in self.alignments:
            if entry.uto_term not in by_name:
                raise SchemaError(f"Alignment names unknown UTO term: {entry.uto_term}")
            known = by_external.get(entry.external_iri)
            if known is not None and known.uto_term != entry.uto_term:
                raise SchemaError(f"{entry.external_iri} aligned to both {known.uto_term} and {entry.uto_term}")
            by_external.setdefault(entry.external_iri, entry)
        for relation in self.relations:
            if relation.inverse_name and relation.inverse_name not in by_name:
                raise SchemaError(f"Inverse of {relation.name} is not declared: {relation.inverse_name}")
        object.__setattr__(self, '_by_name', MappingProxyType(by_name))
        object.__setattr__(self, '_by_external', MappingProxyType(by_external))

    @property
    def forward_relations(self):
        return tuple(relation for relation in self.relations if relation.forward)

    def iri(self, name):
        if name not in self._by_name:
            raise KeyError(f"Unknown UTO term: {name}")
        return URIRef(self.base_namespace + name)

    def concept(self, name):
        term = self._by_name[name]
        if not isinstance(term, ConceptDef):
            raise KeyError(f"Not a concept: {name}")
        return term

    def relation(self, name):
        term = self._by_name[name]
        if not isinstance(term, RelationDef):
            raise KeyError(f"Not a relation: {name}")
        return term

    def term_name(self, iri):
        """Name of a UTO term given its IRI, or None for anything outside the schema."""
        value = str(iri)
        if not value.startswith(self.base_namespace):
            return None
        name = value[len(self.base_namespace):]
        return name if name in self._by_name else None

    def is_relation(self, name):
        return isinstance(self._by_name.get(name), RelationDef)

    def alignment_for(self, iri):
        return self._by_external.get(URIRef(str(iri)))

    def predicate_order(self):
        return [self.iri(relation.name) for relation in self.relations]


def _relation_from_settings(name, config):
    return RelationDef(
        name=name,
        domain=config['domain'],
        range=config['range'],
        exactly_one=bool(config.get('exactly_one', False)),
        transitive=bool(config.get('transitive', False)),
        symmetric=bool(config.get('symmetric', False)),
        inverse_name=config.get('inverse'),
        inverse_functional=bool(config.get('inverse_functional', False)),
        hub_projection=bool(config.get('hub_projection', False)),
        owl_domain=config.get('owl_domain'),
    )


def _inverse_of(relation):
    return RelationDef(name=relation.inverse_name, domain=relation.range, range=relation.domain,
                       inverse_name=relation.name, forward=False)


@lru_cache(maxsize=None)
def load_schema():
    settings = load_mappings_from_yaml(os.path.join('settings', 'uto.yaml'))

    concepts = []
    for name, config in settings['concepts'].items():
        if name not in CONCEPT_NAMES:
            raise SchemaError(f"Unknown concept in settings: {name}")
        if config['value_type'] not in VALUE_TYPES:
            raise SchemaError(f"Unknown value type for {name}: {config['value_type']}")
        concepts.append(ConceptDef(name, tuple(config.get('synonyms') or ()), config['value_type'],
                                   config.get('description', ''), config.get('owl_comment', ''),
                                   tuple(URIRef(expand_curie(iri)) for iri in config.get('union_of') or ())))

    forward = [_relation_from_settings(name, config) for name, config in settings['relations'].items()]
    inverses = [_inverse_of(relation) for relation in forward if relation.inverse_name]

    alignments = [AlignmentEntry(entry['term'], URIRef(expand_curie(entry['iri'])), AlignmentKind(entry['kind']),
                                 bool(entry.get('owl', True)))
                  for entry in settings['alignments']]

    schema = UtoSchema(tuple(concepts), tuple(forward + inverses), tuple(alignments),
                       settings['base_namespace'])
    if len(schema.concepts) != 8 or len(schema.forward_relations) != 8:
        raise SchemaError("UTO declares exactly 8 concepts and 8 relations")
    return schema
