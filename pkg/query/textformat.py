"""YAML form of a Query, used by ``main.py query raw --file``.

    prefixes:            # optional, added to the built-in uto/foaf/sioc/... prefixes
      ex: http://example.org/
    select: [object, vote]
    distinct: true
    where:               # a list of blocks combined by UNION; a block is a list of patterns
      - - ["?x", "uto:hasObject", "?object"]
        - ["?x", "uto:hasVote", "?vote"]
        - ["?x", "uto:hasTag", "<http://del.icio.us/tag/design>"]
    order_by: {variable: vote, numeric: true, descending: true}

A term is ``?name`` (variable), ``<iri>``, ``prefix:local`` or a quoted
literal ``'"text"'``.
"""
import yaml
from rdflib import Literal, URIRef

from query.model import OrderBy, Pattern, Query, QueryError, Variable
from store.namespaces import PREFIXES


def parse_term(text, prefixes):
    text = str(text).strip()
    if text.startswith('?') and len(text) > 1:
        return Variable(text[1:])
    if text.startswith('<') and text.endswith('>'):
        return URIRef(text[1:-1])
    if len(text) >= 2 and text.startswith('"') and text.endswith('"'):
        return Literal(text[1:-1])
    prefix, sep, local = text.partition(':')
    if sep and prefix in prefixes:
        return URIRef(prefixes[prefix] + local)
    raise QueryError(f"Cannot read query term: {text!r}")


def query_from_mapping(document):
    if not isinstance(document, dict):
        raise QueryError("A query document must be a mapping")
    prefixes = {**PREFIXES, **(document.get('prefixes') or {})}
    blocks = []
    for block in document.get('where') or []:
        patterns = []
        for pattern in block:
            if len(pattern) != 3:
                raise QueryError(f"A pattern needs subject, predicate and object: {pattern!r}")
            patterns.append(Pattern(*(parse_term(term, prefixes) for term in pattern)))
        blocks.append(tuple(patterns))

    order_by = None
    if document.get('order_by'):
        order = document['order_by']
        order_by = OrderBy(str(order['variable']).lstrip('?'), bool(order.get('numeric', False)),
                           bool(order.get('descending', False)))

    select = [str(name).lstrip('?') for name in document.get('select') or []]
    return Query(tuple(select), tuple(blocks), bool(document.get('distinct', False)), order_by)


def load_query(file_path):
    try:
        with open(file_path, 'r', encoding='utf-8') as file:
            document = yaml.safe_load(file)
    except yaml.YAMLError as e:
        raise QueryError(f"Query file {file_path} is not valid YAML: {e}") from e
    return query_from_mapping(document)
