from collections import Counter, defaultdict
from itertools import combinations

import pandas as pd

from ontology.schema import load_schema
from ontology.validation import tagging_nodes

AXES = ('object', 'tagger')


def _pairs(tags):
    return combinations(sorted(set(tags), key=str), 2)


def cooccurrence(g, axis='object', schema=None):
    """(tag, tag) -> count with the lexicographically smaller tag first.

    axis='object' counts a pair once per tagging node holding both tags;
    axis='tagger' counts it once per tagger who used both, over all their taggings.
    """
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    schema = schema or load_schema()
    has_tag, has_creator = schema.iri('hasTag'), schema.iri('hasCreator')

    groups = defaultdict(set)
    for node in tagging_nodes(g, schema):
        tags = set(g.objects(node, has_tag))
        if axis == 'object':
            groups[node] |= tags
        else:
            for tagger in g.objects(node, has_creator):
                groups[tagger] |= tags

    counts = Counter()
    for tags in groups.values():
        counts.update(_pairs(tags))
    return dict(counts)


def to_frame(counts):
    pairs_df = pd.DataFrame([(str(a), str(b), n) for (a, b), n in counts.items()],
                            columns=['tag_a', 'tag_b', 'count'])
    return pairs_df.sort_values(['count', 'tag_a', 'tag_b'], ascending=[False, True, True]).reset_index(drop=True)
