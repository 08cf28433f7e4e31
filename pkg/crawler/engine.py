import logging
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import pandas as pd

from crawler.fetch import FetchError
from crawler.frontier import Frontier
from crawler.policy import dedup_key, should_visit
from ontology.schema import load_schema
from store.model import new_graph
from store.records import mint_tagging_id, record_to_triples


@dataclass
class CrawlStats:
    site: str
    pages_fetched: int = 0  # successful fetches, unparseable pages included
    fetch_failures: int = 0
    parse_failures: int = 0
    records: int = 0
    invalid_records: int = 0
    untagged_records: int = 0
    triples: int = 0
    tags: set = field(default_factory=set, repr=False)
    taggers: set = field(default_factory=set, repr=False)
    objects: set = field(default_factory=set, repr=False)

    def observe(self, record, triple_count):
        self.records += 1
        self.triples += triple_count
        self.tags.update(record.tags)
        # Taggers are counted even when the record carries no tags.
        self.taggers.add(record.tagger)
        self.objects.add(record.object)
        if not record.tags:
            self.untagged_records += 1

    def as_row(self):
        return {
            'site': self.site,
            'pages_fetched': self.pages_fetched,
            'fetch_failures': self.fetch_failures,
            'parse_failures': self.parse_failures,
            'records': self.records,
            'invalid_records': self.invalid_records,
            'untagged_records': self.untagged_records,
            'triples': self.triples,
            'distinct_tags': len(self.tags),
            'distinct_taggers': len(self.taggers),
            'distinct_objects': len(self.objects),
        }

    def summary(self):
        row = self.as_row()
        return (f"{row['site']}: {row['pages_fetched']} pages fetched ({row['fetch_failures']} failed, "
                f"{row['parse_failures']} unparsed), {row['records']} records "
                f"({row['untagged_records']} untagged, {row['invalid_records']} invalid), "
                f"{row['distinct_tags']} tags, {row['distinct_taggers']} taggers, {row['distinct_objects']} objects")

    def to_csv(self, file_path):
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        pd.DataFrame([self.as_row()]).to_csv(file_path, index=False)
        logging.info(f"Crawl statistics saved to {file_path}")


class GraphSink:
    """Single consumer collecting crawled records and their triples into one graph."""

    def __init__(self, graph=None):
        self.graph = graph if graph is not None else new_graph()
        self.records = []

    def add_record(self, record, triples):
        self.records.append(record)
        self.add_triples(triples)

    def add_triples(self, triples):
        for triple in triples:
            self.graph.add(triple)


def parse_page(adapter, html, url):
    return adapter.parse(html, url)


def _fetch_and_parse(key, adapter, fetcher):
    try:
        html = fetcher.fetch(key)
    except FetchError as e:
        logging.warning(str(e))
        return key, None, 'fetch'
    try:
        return key, parse_page(adapter, html, key), None
    except (ValueError, KeyError) as e:
        logging.warning(f"Could not parse {key}: {e}")
        return key, None, 'parse'


def assign_ids(records, key, seed=0):
    """Tagging ids drawn from a generator seeded by (seed, page key, position), so ids do not depend on scheduling."""
    return [record.with_id(mint_tagging_id(randomness=random.Random(f"{seed}:{key}:{index}")))
            for index, record in enumerate(records)]


def crawl(seeds, adapter, fetcher, policy, sink, seed=0, schema=None):
    """Breadth-first crawl from seeds; each frontier level is fetched by the worker pool and consumed in queue order."""
    if not seeds:
        raise ValueError("crawl needs at least one seed URL")
    schema = schema or load_schema()
    has_related_tag = schema.iri('hasRelatedTag')
    frontier = Frontier()
    stats = CrawlStats(policy.site)

    for url in seeds:
        if should_visit(url, policy, frontier):
            frontier.push(dedup_key(url, policy))

    with ThreadPoolExecutor(max_workers=policy.worker_count) as executor:
        while len(frontier):
            batch = frontier.pop_batch(policy.max_pages - frontier.claimed)
            if not batch:
                break
            logging.debug(f"Fetching {len(batch)} pages with {policy.worker_count} workers")
            for key, page, failure in executor.map(lambda key: _fetch_and_parse(key, adapter, fetcher), batch):
                if failure == 'fetch':
                    stats.fetch_failures += 1
                    continue
                stats.pages_fetched += 1
                if failure == 'parse':
                    stats.parse_failures += 1
                    continue

                for record in assign_ids(page.records, key, seed):
                    try:
                        triples = record_to_triples(record, schema)
                    except ValueError as e:
                        stats.invalid_records += 1
                        logging.warning(f"Skipping record from {key}: {e}")
                        continue
                    sink.add_record(record, triples)
                    stats.observe(record, len(triples))

                if page.related:
                    related = [(a, has_related_tag, b) for a, b in page.related]
                    sink.add_triples(related)
                    stats.triples += len(related)

                for link in page.outlinks:
                    if should_visit(link, policy, frontier):
                        frontier.push(dedup_key(link, policy))

    logging.info(stats.summary())
    return stats
