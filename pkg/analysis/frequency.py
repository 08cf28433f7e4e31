import logging
from dataclasses import dataclass

import pandas as pd

from analysis.rounding import percentage
from utils.load import load_analysis_settings


class FrequencyRangeError(ValueError):
    def __init__(self, count, last_edge):
        super().__init__(f"Tag frequency {count} exceeds the last bucket edge {last_edge}")
        self.count = count


@dataclass(frozen=True)
class BucketRow:
    lo: int
    hi: int
    unique_count: int
    cumulative_pct: float

    @property
    def label(self):
        return f"{self.lo:,}" if self.lo == self.hi else f"{self.lo:,}-{self.hi:,}"


def default_edges():
    return list(load_analysis_settings()['frequency_edges'])


def _check_edges(edges):
    if not edges or edges[0] < 1 or any(b <= a for a, b in zip(edges, edges[1:])):
        raise ValueError(f"Bucket edges must be strictly increasing positive integers: {edges}")


def cumulative_rows(unique_counts, edges):
    """BucketRows from per-bucket unique-tag counts; bucket i covers (edges[i-1], edges[i]]."""
    _check_edges(edges)
    if len(unique_counts) != len(edges):
        raise ValueError(f"Expected {len(edges)} bucket counts, got {len(unique_counts)}")
    total = sum(unique_counts)
    rows, running, lo = [], 0, 1
    for hi, count in zip(edges, unique_counts):
        running += count
        rows.append(BucketRow(lo, hi, int(count), percentage(running, total)))
        lo = hi + 1
    return rows


def frequency_table(h, edges=None):
    edges = default_edges() if edges is None else list(edges)
    _check_edges(edges)
    frequencies = pd.Series(list(h.counts.values()), dtype='int64')
    if len(frequencies) and frequencies.max() > edges[-1]:
        raise FrequencyRangeError(int(frequencies.max()), edges[-1])

    buckets = pd.cut(frequencies, bins=[0] + edges, right=True, labels=False)
    unique_counts = buckets.value_counts().reindex(range(len(edges)), fill_value=0).tolist()
    logging.info(f"Bucketed {h.unique_tags} unique tags into {len(edges)} frequency ranges")
    return cumulative_rows(unique_counts, edges)


def to_frame(rows):
    return pd.DataFrame({
        'range': [row.label for row in rows],
        'unique_tags': [row.unique_count for row in rows],
        'cumulative_pct': [f"{row.cumulative_pct:.2f}%" for row in rows],
    })
