from rdflib import Graph, Literal

from store.namespaces import PREFIXES


def serialize_rdfxml(g):
    """Write RDF/XML with one rdf:Description per subject. There is no RDF/XML reader."""
    ordered = Graph(bind_namespaces='none')
    for prefix, namespace in PREFIXES.items():
        ordered.bind(prefix, namespace, override=True)
    # Inserting in sorted order keeps rdflib's output stable between runs.
    for triple in sorted(g, key=lambda t: (str(t[0]), str(t[1]), isinstance(t[2], Literal), str(t[2]))):
        ordered.add(triple)
    return ordered.serialize(format='xml')
