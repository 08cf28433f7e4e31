import re
from dataclasses import dataclass
from enum import Enum

from rdflib import Literal, URIRef
from rdflib.namespace import RDF

from ontology.alignment import canonicalize_term
from ontology.schema import AlignmentKind
from store.model import is_monthstamp

_NON_NEGATIVE_INT = re.compile(r'^\d+$')
_IRI_OBJECTS = ('hasTag', 'hasRelatedTag', 'hasObject', 'hasSource')


class Rule(str, Enum):
    CARDINALITY = 'cardinality'
    RANGE_TYPE = 'range-type'
    DATE_FORMAT = 'date-format'
    VOTE_TYPE = 'vote-type'


@dataclass(frozen=True, order=True)
class Violation:
    subject: str
    rule: str
    detail: str


def tagging_nodes(g, schema):
    """Hub nodes of a graph.

    A subject typed uto:Tagging or carrying hasCreator, hasObject or hasDate is
    a hub. A subject carrying only hub-projected relations (hasTag, hasComment,
    hasVote) is a hub too, unless it is the object of some hasObject triple or
    is typed as an Object; those are the object-level forms.
    """
    nodes = set(g.subjects(RDF.type, schema.iri('Tagging')))
    projected = set()
    for relation in schema.forward_relations:
        if relation.hub_projection:
            projected.update(g.subjects(schema.iri(relation.name), None))
        elif relation.domain == 'Tagging':
            nodes.update(g.subjects(schema.iri(relation.name), None))
    objects = set(g.objects(None, schema.iri('hasObject')))
    for node in projected - nodes - objects:
        if not any(_is_object_class(cls, schema) for cls in g.objects(node, RDF.type)):
            nodes.add(node)
    return nodes


def _is_object_class(cls, schema):
    canonical = canonicalize_term(cls, schema)
    return canonical is not None and canonical.uto_term == 'Object' and canonical.kind is not AlignmentKind.SUPER_OF


def _classified_as(g, node, concept, schema):
    """True when the node is untyped or one of its rdf:type classes is (a subclass of) concept."""
    types = list(g.objects(node, RDF.type))
    if not types:
        return True
    for cls in types:
        canonical = canonicalize_term(cls, schema)
        if canonical and canonical.uto_term == concept and canonical.kind is not AlignmentKind.SUPER_OF:
            return True
    return False


def validate(g, schema):
    violations = []

    for node in tagging_nodes(g, schema):
        for relation in schema.forward_relations:
            if not relation.exactly_one:
                continue
            values = set(g.objects(node, schema.iri(relation.name)))
            if len(values) != 1:
                violations.append(Violation(str(node), Rule.CARDINALITY.value,
                                            f"expected exactly one {relation.name}, found {len(values)}"))

    for name in _IRI_OBJECTS:
        for s, o in g.subject_objects(schema.iri(name)):
            if not isinstance(o, URIRef):
                violations.append(Violation(str(s), Rule.RANGE_TYPE.value, f"{name} object must be an IRI: {o!r}"))

    for s, o in g.subject_objects(schema.iri('hasComment')):
        if not isinstance(o, Literal):
            violations.append(Violation(str(s), Rule.RANGE_TYPE.value, f"hasComment object must be a literal: {o}"))

    for s, o in g.subject_objects(schema.iri('hasCreator')):
        if isinstance(o, URIRef) and not _classified_as(g, o, 'Tagger', schema):
            violations.append(Violation(str(s), Rule.RANGE_TYPE.value, f"hasCreator object is not a Tagger: {o}"))

    for s, o in g.subject_objects(schema.iri('hasVote')):
        if not isinstance(o, Literal) or not _NON_NEGATIVE_INT.match(str(o)):
            violations.append(Violation(str(s), Rule.VOTE_TYPE.value,
                                        f"hasVote must be a non-negative integer: {str(o)!r}"))

    for s, o in g.subject_objects(schema.iri('hasDate')):
        if not isinstance(o, Literal) or not is_monthstamp(o):
            violations.append(Violation(str(s), Rule.DATE_FORMAT.value, f"hasDate must match 'Mmm YY': {str(o)!r}"))

    return sorted(violations)
