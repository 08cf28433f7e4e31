from rdflib import BNode, Graph, Literal, URIRef
from rdflib.namespace import OWL, RDF, RDFS, XSD

from ontology.schema import AlignmentKind
from store.namespaces import PREFIXES


def _add_union(g, cls, name, members):
    """owl:unionOf as an rdf:List with fixed blank node ids."""
    head = BNode(f'{name}Union0')
    g.add((cls, OWL.unionOf, head))
    cell = head
    for index, member in enumerate(members):
        g.add((member, RDF.type, OWL.Class))
        g.add((cell, RDF.first, member))
        following = BNode(f'{name}Union{index + 1}') if index + 1 < len(members) else RDF.nil
        g.add((cell, RDF.rest, following))
        cell = following


def schema_to_graph(schema):
    """OWL form of the schema, carrying the same triples as the published uto.owl.

    Object is the owl:unionOf its member classes, so its SuperOf alignments are
    not written again as subclass axioms. Alignments marked ``owl: false`` in
    the settings and the schema-internal inverse properties are not exported.
    """
    g = Graph(bind_namespaces='none')
    for prefix, namespace in PREFIXES.items():
        g.bind(prefix, namespace, override=True)
    g.add((URIRef(schema.base_namespace.rstrip('#')), RDF.type, OWL.Ontology))

    for concept in schema.concepts:
        iri = schema.iri(concept.name)
        g.add((iri, RDF.type, OWL.Class))
        g.add((iri, RDFS.label, Literal(concept.name)))
        g.add((iri, RDFS.comment, Literal(concept.owl_comment or concept.description, datatype=XSD.string)))
        if concept.union_of:
            _add_union(g, iri, concept.name, concept.union_of)

    for relation in schema.forward_relations:
        iri = schema.iri(relation.name)
        g.add((iri, RDF.type, OWL.ObjectProperty))
        if relation.inverse_functional:
            g.add((iri, RDF.type, OWL.InverseFunctionalProperty))
        g.add((iri, RDFS.label, Literal(relation.name)))
        g.add((iri, RDFS.domain, schema.iri(relation.owl_domain or relation.domain)))
        g.add((iri, RDFS.range, schema.iri(relation.range)))

    for entry in schema.alignments:
        if not entry.in_owl:
            continue
        term = schema.iri(entry.uto_term)
        if schema.is_relation(entry.uto_term):
            g.add((term, OWL.equivalentProperty, entry.external_iri))
        elif entry.kind is AlignmentKind.EQUIVALENT:
            g.add((term, OWL.equivalentClass, entry.external_iri))
        elif entry.kind is AlignmentKind.SUB_OF:
            g.add((term, RDFS.subClassOf, entry.external_iri))
        elif not schema.concept(entry.uto_term).union_of:
            g.add((entry.external_iri, RDFS.subClassOf, term))
    return g


def export_owl(schema):
    return schema_to_graph(schema).serialize(format='pretty-xml')
