import random
from collections import defaultdict

import pytest
from rdflib import Graph, Literal, URIRef
from rdflib.collection import Collection
from rdflib.compare import isomorphic
from rdflib.namespace import OWL, RDF, RDFS

from conftest import COMMONCRAFT_NODE, COMMONCRAFT_OBJECT, COMMONCRAFT_TAGS
from ontology.alignment import canonicalize_term, expand_graph
from ontology.inference import infer_closure
from ontology.owl import export_owl
from ontology.schema import AlignmentEntry, AlignmentKind, SchemaError, UtoSchema
from ontology.validation import Rule, tagging_nodes, validate
from store.model import MonthStamp, new_graph
from store.namespaces import PREFIXES, UTO
from store.records import TaggingRecord, mint_tagging_id, record_to_triples
from store.tags import tag_iri

FOAF = PREFIXES['foaf']
SKOS = PREFIXES['skos']
SIOC = PREFIXES['sioc']

INVERSES = {
    'hasTag': 'is_tag_of',
    'hasCreator': 'is_creator_of',
    'hasObject': 'is_object_of',
    'hasSource': 'is_source_of',
    'hasComment': 'is_comment_of',
    'hasVote': 'is_vote_of',
}
HUB_PROJECTED = ('hasTag', 'hasComment', 'hasVote')


def naive_closure(triples):
    """Apply every rule to the whole set until nothing new appears."""
    inverse = {}
    for forward, backward in INVERSES.items():
        inverse[UTO[forward]] = UTO[backward]
        inverse[UTO[backward]] = UTO[forward]
    related = UTO.hasRelatedTag
    hubs = {UTO[name] for name in HUB_PROJECTED}

    closed = set(triples)
    while True:
        new = set()
        for s, p, o in closed:
            if isinstance(o, Literal):
                continue
            if p in inverse:
                new.add((o, inverse[p], s))
            if p == related:
                new.add((o, p, s))
        related_pairs = [(s, o) for s, p, o in closed if p == related]
        for a, b in related_pairs:
            for b2, c in related_pairs:
                if b2 == b:
                    new.add((a, related, c))
        hub_values = defaultdict(set)
        for t, h, v in closed:
            if h in hubs:
                hub_values[t].add((h, v))
        for t, p, o in closed:
            if p == UTO.hasObject and not isinstance(o, Literal):
                new.update((o, h, v) for h, v in hub_values[t])
        if new <= closed:
            return closed
        closed |= new


NODES = [URIRef(f'http://example.org/n{index}') for index in range(6)]
VALUES = NODES + [Literal('1'), Literal('x')]
PREDICATES = [UTO[name] for name in list(INVERSES) + list(INVERSES.values()) + ['hasRelatedTag', 'hasDate']]
PREDICATES.append(URIRef(FOAF + 'maker'))


def random_triples(rng, size):
    return {(rng.choice(NODES), rng.choice(PREDICATES), rng.choice(VALUES)) for _ in range(size)}


# Schema

def test_schema_declares_eight_concepts_and_relations(schema):
    assert [concept.name for concept in schema.concepts] == [
        'Tagging', 'Tag', 'Tagger', 'Object', 'Source', 'Comment', 'Date', 'Vote']
    assert [relation.name for relation in schema.forward_relations] == [
        'hasTag', 'hasRelatedTag', 'hasCreator', 'hasObject', 'hasDate', 'hasSource', 'hasComment', 'hasVote']
    assert len(schema.relations) == 14


def test_schema_relation_facts(schema):
    assert schema.relation('hasRelatedTag').symmetric
    assert schema.relation('hasSource').inverse_functional
    assert schema.relation('is_tag_of').inverse_name == 'hasTag'
    assert [name for name in ('hasCreator', 'hasObject', 'hasDate') if schema.relation(name).exactly_one] == [
        'hasCreator', 'hasObject', 'hasDate']
    assert schema.concept('Vote').value_type == 'integer'
    assert schema.iri('hasTag') == URIRef('http://info.slis.indiana.edu/~dingying/uto.owl#hasTag')


def test_schema_rejects_alignment_to_unknown_term(schema):
    bad = (AlignmentEntry('Nope', URIRef('http://example.org/x'), AlignmentKind.EQUIVALENT),)
    with pytest.raises(SchemaError):
        UtoSchema(schema.concepts, schema.relations, bad, schema.base_namespace)


def test_schema_rejects_external_iri_aligned_twice(schema):
    iri = URIRef('http://example.org/x')
    bad = (AlignmentEntry('Tag', iri, AlignmentKind.EQUIVALENT),
           AlignmentEntry('Tagger', iri, AlignmentKind.EQUIVALENT))
    with pytest.raises(SchemaError):
        UtoSchema(schema.concepts, schema.relations, bad, schema.base_namespace)


# Alignment

@pytest.mark.parametrize('iri, term, kind', [
    (FOAF + 'Person', 'Tagger', AlignmentKind.EQUIVALENT),
    (SIOC + 'User', 'Tagger', AlignmentKind.EQUIVALENT),
    (FOAF + 'Agent', 'Tagger', AlignmentKind.SUPER_OF),
    (FOAF + 'Document', 'Object', AlignmentKind.SUB_OF),
    (SKOS + 'Concept', 'Tag', AlignmentKind.EQUIVALENT),
    (SKOS + 'narrower', 'hasRelatedTag', AlignmentKind.EQUIVALENT),
    (PREFIXES['dct'] + 'creator', 'hasCreator', AlignmentKind.EQUIVALENT),
    ('http://info.slis.indiana.edu/~dingying/uto.owl#hasTag', 'hasTag', AlignmentKind.EQUIVALENT),
])
def test_canonicalize_term(schema, iri, term, kind):
    canonical = canonicalize_term(URIRef(iri), schema)
    assert (canonical.uto_term, canonical.kind) == (term, kind)


def test_canonicalize_unknown_term(schema):
    assert canonicalize_term(URIRef('http://example.org/unknown'), schema) is None


def test_expand_graph_adds_uto_forms(schema):
    node, photo, person = NODES[:3]
    g = new_graph([
        (node, URIRef(FOAF + 'maker'), Literal('sborrelli')),
        (photo, RDF.type, URIRef(FOAF + 'Image')),
        (person, RDF.type, URIRef(FOAF + 'Agent')),
        (node, URIRef('http://example.org/unaligned'), photo),
    ])
    expanded = expand_graph(g, schema)
    assert set(g) <= set(expanded)
    assert (node, UTO.hasCreator, Literal('sborrelli')) in expanded
    assert (photo, RDF.type, UTO.Object) in expanded
    # A superclass of Tagger says nothing about the node being a Tagger.
    assert (person, RDF.type, UTO.Tagger) not in expanded
    assert len(expanded) == len(g) + 2


def test_expand_graph_leaves_uto_graph_unchanged(schema, commoncraft_graph):
    commoncraft_graph.add((COMMONCRAFT_NODE, RDF.type, UTO.Tagging))
    closed = infer_closure(commoncraft_graph, schema)
    for g in (commoncraft_graph, closed):
        assert set(expand_graph(g, schema)) == set(g)
    once = expand_graph(new_graph([(NODES[0], URIRef(SKOS + 'broader'), NODES[1])]), schema)
    assert set(expand_graph(once, schema)) == set(once)


# Inference

def test_closure_of_canonical_example(schema, commoncraft_graph):
    closed = infer_closure(commoncraft_graph, schema)
    for tag in COMMONCRAFT_TAGS:
        assert (COMMONCRAFT_OBJECT, UTO.hasTag, tag) in closed
        assert (tag, UTO.is_tag_of, COMMONCRAFT_NODE) in closed
        assert (tag, UTO.is_tag_of, COMMONCRAFT_OBJECT) in closed
    assert (COMMONCRAFT_OBJECT, UTO.hasVote, Literal('103')) in closed
    assert (COMMONCRAFT_OBJECT, UTO.is_object_of, COMMONCRAFT_NODE) in closed
    assert not list(closed.triples((COMMONCRAFT_OBJECT, UTO.hasCreator, None)))
    assert not any(isinstance(s, Literal) for s in closed.subjects())
    assert len(closed) == 28


def test_closure_of_related_tags_is_symmetric_and_transitive(schema):
    a, b, c = (tag_iri('delicious', text) for text in 'abc')
    g = new_graph([(a, UTO.hasRelatedTag, b), (b, UTO.hasRelatedTag, c)])
    closed = infer_closure(g, schema)
    expected = {(x, UTO.hasRelatedTag, y) for x in (a, b, c) for y in (a, b, c)}
    assert set(closed) == expected


def test_related_pair_closes_onto_itself(schema):
    a, b = (tag_iri('flickr', text) for text in ('london', 'bridge'))
    closed = infer_closure(new_graph([(a, UTO.hasRelatedTag, b)]), schema)
    assert set(closed) == {(a, UTO.hasRelatedTag, b), (b, UTO.hasRelatedTag, a),
                           (a, UTO.hasRelatedTag, a), (b, UTO.hasRelatedTag, b)}


def test_inverse_rule_runs_both_ways(schema):
    tag, node = NODES[:2]
    closed = infer_closure(new_graph([(tag, UTO.is_tag_of, node)]), schema)
    assert set(closed) == {(tag, UTO.is_tag_of, node), (node, UTO.hasTag, tag)}


def test_closure_keeps_empty_graph_empty(schema):
    assert len(infer_closure(new_graph(), schema)) == 0


def test_closure_matches_naive_fixpoint(schema):
    rng = random.Random(500)
    for _ in range(500):
        triples = random_triples(rng, rng.randint(0, 50))
        closed = infer_closure(new_graph(triples), schema)
        assert set(closed) == naive_closure(triples)
        assert set(infer_closure(closed, schema)) == set(closed)


def test_closure_is_monotone(schema):
    rng = random.Random(77)
    for _ in range(100):
        small = random_triples(rng, rng.randint(0, 25))
        large = small | random_triples(rng, rng.randint(0, 25))
        assert set(infer_closure(new_graph(small), schema)) <= set(infer_closure(new_graph(large), schema))


# Validation

def _replace(g, predicate, value):
    g.remove((COMMONCRAFT_NODE, predicate, None))
    g.add((COMMONCRAFT_NODE, predicate, value))
    return g


def test_canonical_example_is_valid(schema, commoncraft_graph):
    assert tagging_nodes(commoncraft_graph, schema) == {COMMONCRAFT_NODE}
    assert validate(commoncraft_graph, schema) == []
    assert validate(infer_closure(commoncraft_graph, schema), schema) == []


@pytest.mark.parametrize('change, rule', [
    (lambda g: g.add((COMMONCRAFT_NODE, UTO.hasObject, URIRef('http://example.org/other'))), Rule.CARDINALITY),
    (lambda g: g.remove((COMMONCRAFT_NODE, UTO.hasCreator, None)), Rule.CARDINALITY),
    (lambda g: g.add((COMMONCRAFT_NODE, UTO.hasDate, Literal('Jul 07'))), Rule.CARDINALITY),
    (lambda g: _replace(g, UTO.hasVote, Literal('many')), Rule.VOTE_TYPE),
    (lambda g: _replace(g, UTO.hasVote, Literal('-3')), Rule.VOTE_TYPE),
    (lambda g: _replace(g, UTO.hasDate, Literal('June 2007')), Rule.DATE_FORMAT),
    (lambda g: _replace(g, UTO.hasObject, Literal('commoncraft')), Rule.RANGE_TYPE),
    (lambda g: g.add((COMMONCRAFT_NODE, UTO.hasTag, Literal('design'))), Rule.RANGE_TYPE),
])
def test_each_violation_is_reported(schema, commoncraft_graph, change, rule):
    change(commoncraft_graph)
    violations = validate(commoncraft_graph, schema)
    assert [(violation.subject, violation.rule) for violation in violations] == [
        (str(COMMONCRAFT_NODE), rule.value)]


def test_typed_creator_must_be_a_tagger(schema, commoncraft_graph):
    person = URIRef('http://example.org/people/sborrelli')
    _replace(commoncraft_graph, UTO.hasCreator, person)
    commoncraft_graph.add((person, RDF.type, URIRef(FOAF + 'Person')))
    assert validate(commoncraft_graph, schema) == []
    commoncraft_graph.add((person, RDF.type, URIRef(FOAF + 'Document')))
    commoncraft_graph.remove((person, RDF.type, URIRef(FOAF + 'Person')))
    assert [violation.rule for violation in validate(commoncraft_graph, schema)] == [Rule.RANGE_TYPE.value]


def test_violations_are_sorted(schema, commoncraft_graph):
    other = URIRef('http://example.org/tagging/2')
    commoncraft_graph.add((other, UTO.hasVote, Literal('lots')))
    commoncraft_graph.add((other, UTO.hasObject, COMMONCRAFT_OBJECT))
    _replace(commoncraft_graph, UTO.hasDate, Literal('2007'))
    violations = validate(commoncraft_graph, schema)
    assert violations == sorted(violations)
    assert [violation.rule for violation in violations].count(Rule.CARDINALITY.value) == 2
    assert len(violations) == 4


def test_hub_with_only_vote_and_comment_is_checked(schema):
    node = URIRef('http://example.org/tagging/3')
    g = new_graph([(node, UTO.hasVote, Literal('5')), (node, UTO.hasComment, Literal('x'))])
    assert tagging_nodes(g, schema) == {node}
    violations = validate(g, schema)
    assert [(violation.subject, violation.rule) for violation in violations] == [
        (str(node), Rule.CARDINALITY.value)] * 3
    assert sorted(violation.detail for violation in violations) == [
        'expected exactly one hasCreator, found 0',
        'expected exactly one hasDate, found 0',
        'expected exactly one hasObject, found 0',
    ]


def test_object_level_tags_are_not_hubs(schema, commoncraft_graph):
    design = tag_iri('delicious', 'design')
    commoncraft_graph.add((COMMONCRAFT_OBJECT, UTO.hasTag, design))
    page = URIRef('http://example.org/page')
    commoncraft_graph.add((page, RDF.type, URIRef(FOAF + 'Document')))
    commoncraft_graph.add((page, UTO.hasTag, design))
    assert tagging_nodes(commoncraft_graph, schema) == {COMMONCRAFT_NODE}
    assert validate(commoncraft_graph, schema) == []


def test_random_valid_records_have_no_violations(schema):
    rng = random.Random(1000)
    sites = ('delicious', 'flickr', 'youtube')
    for index in range(1000):
        tags = tuple({tag_iri(rng.choice(sites), f'tag{rng.randint(0, 30)}') for _ in range(rng.randint(0, 5))})
        record = TaggingRecord(
            tagger=f'user{rng.randint(0, 50)}',
            object=URIRef(f'http://objects.example.org/{rng.randint(0, 200)}'),
            date=MonthStamp(rng.randint(1, 12), rng.randint(0, 99)),
            tags=tags,
            tagging_id=mint_tagging_id(randomness=rng),
            entry_tag=rng.choice(tags) if tags and rng.random() < 0.5 else None,
            source=URIRef('http://delicious.com') if rng.random() < 0.5 else None,
            comment=rng.choice([None, '', 'nice | page', 'say "hi"']),
            vote=rng.choice([None, 0, 1, 103]),
        )
        assert validate(record_to_triples(record, schema), schema) == [], index


# OWL export

UTO_OWL = r'''
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix foaf: <http://xmlns.com/foaf/0.1/> .
@prefix sioc: <http://rdfs.org/sioc/ns#> .
@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
@prefix dc: <http://purl.org/dc/elements/1.1/> .
@prefix uto: <http://info.slis.indiana.edu/~dingying/uto.owl#> .

<http://info.slis.indiana.edu/~dingying/uto.owl> a owl:Ontology .

uto:Tag a owl:Class ;
    rdfs:comment "A tag is a keyword that a user adds to an object."^^xsd:string ;
    rdfs:label "Tag" ;
    owl:equivalentClass skos:Concept .

uto:Comment a owl:Class ;
    rdfs:comment "A comment is the statement or set of statements that a tagger adds to an object or tag during the act of tagging."^^xsd:string ;
    rdfs:label "Comment" .

uto:Source a owl:Class ;
    rdfs:comment "Source is the place where the object is hosted. It can be delicious, flickr, youtube, etc."^^xsd:string ;
    rdfs:subClassOf sioc:Community ;
    rdfs:label "Source" .

uto:Vote a owl:Class ;
    rdfs:comment "Tagging can be viewed as voting. Vote can be the number of different taggers tagging a bookmark, a photo or a video as favorite."^^xsd:string ;
    rdfs:label "Vote" .

uto:Date a owl:Class ;
    rdfs:comment "Date is the time stamp of tagging behavior. Format is \"MmmYY\""^^xsd:string ;
    rdfs:label "Date" .

uto:Tagger a owl:Class ;
    rdfs:comment "Tagger is the user who tags object"^^xsd:string ;
    rdfs:label "Tagger" ;
    rdfs:subClassOf foaf:Agent, sioc:Usergroup ;
    owl:equivalentClass foaf:Person, sioc:User .

uto:Tagging a owl:Class ;
    rdfs:comment "Tagging is the concept which is created to link other concepts. Itself does not have any real meaning"^^xsd:string ;
    rdfs:label "Tagging" .

uto:Object a owl:Class ;
    rdfs:comment "object is the thing which tagger is tagging. It can be bookmarks, photos, videos, musics, books, slides, etc."^^xsd:string ;
    rdfs:label "Object" ;
    owl:unionOf ( foaf:Document foaf:Image rdfs:Resource sioc:Post ) .

foaf:Document a owl:Class .
foaf:Image a owl:Class .
rdfs:Resource a owl:Class .
sioc:Post a owl:Class .

uto:hasDate a owl:ObjectProperty ;
    rdfs:label "hasDate" ;
    rdfs:domain uto:Tagging ;
    rdfs:range uto:Date ;
    owl:equivalentProperty dc:date .

uto:hasObject a owl:ObjectProperty ;
    rdfs:label "hasObject" ;
    rdfs:range uto:Object ;
    rdfs:domain uto:Tagging .

uto:hasVote a owl:ObjectProperty ;
    rdfs:label "hasVote" ;
    rdfs:range uto:Vote ;
    rdfs:domain uto:Tagging .

uto:hasTag a owl:ObjectProperty ;
    rdfs:label "hasTag" ;
    rdfs:domain uto:Tagging ;
    rdfs:range uto:Tag ;
    owl:equivalentProperty dc:description, foaf:depiction, foaf:topic .

uto:hasComment a owl:ObjectProperty ;
    rdfs:label "hasComment" ;
    rdfs:range uto:Comment ;
    rdfs:domain uto:Tagging ;
    owl:equivalentProperty sioc:note .

uto:hasRelatedTag a owl:ObjectProperty ;
    rdfs:label "hasRelatedTag" ;
    rdfs:domain uto:Tag ;
    rdfs:range uto:Tag ;
    owl:equivalentProperty sioc:related_to, skos:broader, skos:narrower, skos:related .

uto:hasCreator a owl:ObjectProperty ;
    rdfs:label "hasCreator" ;
    rdfs:range uto:Tagger ;
    rdfs:domain uto:Tagging ;
    owl:equivalentProperty dc:creator, foaf:maker, sioc:has_creator .

uto:hasSource a owl:InverseFunctionalProperty, owl:ObjectProperty ;
    rdfs:label "hasSource" ;
    rdfs:range uto:Source ;
    rdfs:domain uto:Object ;
    owl:equivalentProperty sioc:host_of, dc:source .
'''


def test_export_owl_matches_published_ontology(schema):
    exported = Graph().parse(data=export_owl(schema), format='xml')
    published = Graph().parse(data=UTO_OWL, format='turtle')
    assert len(exported) == len(published)
    assert isomorphic(exported, published)


def test_export_owl_declares_schema(schema):
    g = Graph().parse(data=export_owl(schema), format='xml')
    classes = set(g.subjects(RDF.type, OWL.Class))
    assert {UTO[concept.name] for concept in schema.concepts} <= classes
    assert len(set(g.subjects(RDF.type, OWL.ObjectProperty))) == 8
    assert (UTO.hasTag, RDFS.domain, UTO.Tagging) in g
    assert (UTO.hasTag, RDFS.domain, UTO.Object) not in g
    assert list(Collection(g, g.value(UTO.Object, OWL.unionOf))) == [
        URIRef(FOAF + 'Document'), URIRef(FOAF + 'Image'), RDFS.Resource, URIRef(SIOC + 'Post')]
    # Kept for rewriting only.
    assert (UTO.hasSource, OWL.equivalentProperty, URIRef(PREFIXES['dct'] + 'source')) not in g
    assert schema.relation('hasTag').domain == 'Object'


def test_export_owl_is_deterministic(schema):
    assert export_owl(schema) == export_owl(schema)
