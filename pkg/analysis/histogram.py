from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from ontology.schema import load_schema
from ontology.validation import tagging_nodes
from store.tags import tag_text


@dataclass(frozen=True)
class TagHistogram:
    counts: Mapping = field(default_factory=dict)
    total_assignments: int = 0
    unique_tags: int = 0

    @classmethod
    def from_counts(cls, counts):
        counts = {tag: count for tag, count in counts.items() if count > 0}
        return cls(counts, sum(counts.values()), len(counts))

    def most_common(self, n=None):
        """(tag, count) by count descending, ties by tag text."""
        ranked = sorted(self.counts.items(), key=lambda item: (-item[1], str(item[0])))
        return ranked if n is None else ranked[:n]


def tag_histogram(g, schema=None, fold_tag_text=False):
    """Count hasTag triples on tagging nodes, keyed by tag IRI (or by local tag text when folding)."""
    schema = schema or load_schema()
    nodes = tagging_nodes(g, schema)
    counts = Counter()
    for node, tag in g.subject_objects(schema.iri('hasTag')):
        if node in nodes:
            counts[tag_text(tag) if fold_tag_text else tag] += 1
    return TagHistogram.from_counts(counts)


def merge_histograms(histograms):
    counts = Counter()
    for histogram in histograms:
        counts.update(histogram.counts)
    return TagHistogram.from_counts(counts)


def core_tags(h, min_count):
    if min_count < 1:
        raise ValueError(f"min_count must be at least 1, got {min_count}")
    return {tag for tag, count in h.counts.items() if count >= min_count}


def tag_share(h, tag, total=None):
    """Percentage of all tag occurrences taken by one tag (unrounded)."""
    total = h.total_assignments if total is None else total
    if not total:
        return 0.0
    return 100.0 * h.counts.get(tag, 0) / total
