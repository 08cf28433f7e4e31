from collections import defaultdict
from dataclasses import asdict, dataclass
from urllib.parse import urlsplit

import pandas as pd
from rdflib import URIRef

from analysis.rounding import ratio
from ontology.schema import load_schema
from ontology.validation import tagging_nodes


@dataclass(frozen=True)
class SourceSummary:
    source: URIRef
    objects: int
    taggers: int
    tags: int
    tag_per_object: float
    tag_per_tagger: float
    object_per_tagger: float


def summarize_counts(source, objects, taggers, tags):
    return SourceSummary(URIRef(source), objects, taggers, tags,
                         ratio(tags, objects), ratio(tags, taggers), ratio(objects, taggers))


def site_root(source):
    """http://www.flickr.com/photos/u/1 -> http://flickr.com"""
    parts = urlsplit(str(source))
    host = parts.netloc.lower()
    if host.startswith('www.'):
        host = host[4:]
    return URIRef(f"{parts.scheme}://{host}") if host else URIRef(str(source))


def source_summary(g, schema=None, by_site=False):
    """Per hasSource value: distinct objects, distinct taggers and hasTag triples on their tagging nodes."""
    schema = schema or load_schema()
    objects_by_source = defaultdict(set)
    for obj, source in g.subject_objects(schema.iri('hasSource')):
        objects_by_source[site_root(source) if by_site else source].add(obj)

    nodes_by_object = defaultdict(set)
    for node in tagging_nodes(g, schema):
        for obj in g.objects(node, schema.iri('hasObject')):
            nodes_by_object[obj].add(node)

    summaries = []
    for source in sorted(objects_by_source, key=str):
        objects = objects_by_source[source]
        nodes = set().union(*(nodes_by_object[obj] for obj in objects))
        taggers = {tagger for node in nodes for tagger in g.objects(node, schema.iri('hasCreator'))}
        tags = sum(1 for node in nodes for _ in g.objects(node, schema.iri('hasTag')))
        summaries.append(summarize_counts(source, len(objects), len(taggers), tags))
    return summaries


def corpus_total(summaries):
    return sum(summary.tags for summary in summaries)


def to_frame(summaries):
    columns = list(SourceSummary.__dataclass_fields__)
    summaries_df = pd.DataFrame([asdict(summary) for summary in summaries], columns=columns)
    summaries_df['source'] = summaries_df['source'].astype(str)
    for column in ('tag_per_object', 'tag_per_tagger', 'object_per_tagger'):
        summaries_df[column] = summaries_df[column].map(lambda value: f"{value:.2f}")
    return summaries_df
