from typing import NamedTuple

from rdflib import URIRef
from rdflib.namespace import RDF

from ontology.schema import AlignmentKind
from store.model import new_graph


class CanonicalTerm(NamedTuple):
    uto_term: str
    kind: AlignmentKind


def canonicalize_term(iri, schema):
    """Map an IRI to its UTO term.

    The returned kind describes the given IRI relative to the UTO term, so
    foaf:Document (declared as Object SuperOf foaf:Document) comes back as
    (Object, SubOf) and foaf:Agent as (Tagger, SuperOf). UTO terms map to
    themselves as Equivalent.
    """
    name = schema.term_name(iri)
    if name is not None:
        return CanonicalTerm(name, AlignmentKind.EQUIVALENT)
    entry = schema.alignment_for(iri)
    if entry is None:
        return None
    return CanonicalTerm(entry.uto_term, entry.kind.flipped())


def _rewrites_to(iri, schema):
    canonical = canonicalize_term(iri, schema)
    if canonical is None or canonical.kind is AlignmentKind.SUPER_OF:
        return None
    target = schema.iri(canonical.uto_term)
    return target if target != iri else None


def expand_graph(g, schema):
    """Add the UTO form of every aligned predicate and rdf:type class; nothing is removed."""
    expanded = new_graph(g)
    for s, p, o in g:
        if p == RDF.type and isinstance(o, URIRef):
            target = _rewrites_to(o, schema)
            if target is not None and not schema.is_relation(schema.term_name(target)):
                expanded.add((s, RDF.type, target))
            continue
        target = _rewrites_to(p, schema)
        if target is not None and schema.is_relation(schema.term_name(target)):
            expanded.add((s, target, o))
    return expanded
