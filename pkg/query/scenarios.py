"""The three search scenarios, each built as an explicit Query and run through evaluate."""
import logging
from collections import defaultdict

from rdflib import Literal, URIRef

from ontology.schema import load_schema
from query.engine import evaluate, term_key
from query.model import OrderBy, Pattern, Query, Variable
from store.tags import tag_iri, tag_templates

SCENARIO_SITES = ('delicious', 'flickr', 'youtube')

X, OBJECT, VOTE, TAG, TAGGER = (Variable(name) for name in ('x', 'object', 'vote', 'tag', 'tagger'))


def objects_by_tag_query(tag_text, schema=None):
    schema = schema or load_schema()
    blocks = []
    for site in SCENARIO_SITES:
        for index in range(len(tag_templates(site))):
            blocks.append((
                Pattern(X, schema.iri('hasObject'), OBJECT),
                Pattern(X, schema.iri('hasVote'), VOTE),
                Pattern(X, schema.iri('hasTag'), tag_iri(site, tag_text, index)),
            ))
    return Query(('object', 'vote'), tuple(blocks), distinct=True,
                 order_by=OrderBy('vote', numeric_cast=True, descending=True))


def objects_by_tag(tag_text, g):
    """(object, vote) pairs for one tag across the Delicious, Flickr and YouTube tag templates, by vote descending."""
    if not tag_text:
        raise ValueError("tag_text must be non-empty")
    results = []
    for row in evaluate(objects_by_tag_query(tag_text), g):
        try:
            results.append((row['object'], int(str(row['vote']))))
        except ValueError:
            logging.warning(f"Skipping {row['object']}: vote {str(row['vote'])!r} is not an integer")
    return results


def _grouped_by_node(rows, key_var):
    tags = defaultdict(set)
    keys = {}
    for row in rows:
        keys[row['x']] = row[key_var]
        tags[row['x']].add(row['tag'])
    grouped = [(keys[node], tuple(sorted(tags[node], key=term_key))) for node in keys]
    return sorted(grouped, key=lambda item: (term_key(item[0]), [term_key(tag) for tag in item[1]]))


def taggers_of_object_query(object_iri, schema=None):
    schema = schema or load_schema()
    return Query(('x', 'tagger', 'tag'), ((
        Pattern(X, schema.iri('hasObject'), URIRef(object_iri)),
        Pattern(X, schema.iri('hasTag'), TAG),
        Pattern(X, schema.iri('hasCreator'), TAGGER),
    ),))


def taggers_of_object(object_iri, g):
    """(tagger, tags) per tagging node of one object, ordered by tagger."""
    rows = evaluate(taggers_of_object_query(object_iri), g)
    return [(str(tagger), tags) for tagger, tags in _grouped_by_node(rows, 'tagger')]


def objects_of_tagger_query(tagger, schema=None):
    schema = schema or load_schema()
    return Query(('x', 'object', 'tag'), ((
        Pattern(X, schema.iri('hasObject'), OBJECT),
        Pattern(X, schema.iri('hasTag'), TAG),
        Pattern(X, schema.iri('hasCreator'), Literal(tagger)),
    ),))


def objects_of_tagger(tagger, g):
    """(object, tags) per tagging node of one tagger, ordered by object."""
    return _grouped_by_node(evaluate(objects_of_tagger_query(tagger), g), 'object')
