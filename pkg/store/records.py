import logging
import random
import uuid
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from rdflib import Literal, URIRef

from store.model import MonthStamp, make_iri, new_graph
from store.namespaces import TAGGING_BASE
from utils.load import load_csv


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class TaggingRecord:
    """One tagging event, reified through a tagging (hub) node."""
    tagger: str
    object: URIRef
    date: MonthStamp
    tags: Tuple[URIRef, ...] = ()
    tagging_id: Optional[URIRef] = None
    entry_tag: Optional[URIRef] = None
    source: Optional[URIRef] = None
    comment: Optional[str] = None
    vote: Optional[int] = None

    def with_id(self, tagging_id):
        return replace(self, tagging_id=tagging_id)


def mint_tagging_id(base=TAGGING_BASE, randomness=None):
    """Append a version-4 UUID to base. randomness may be a random.Random or an int seed."""
    if randomness is None or isinstance(randomness, int):
        randomness = random.Random(randomness)
    if not base.endswith(('/', '#')):
        base += '/'
    return URIRef(base + str(uuid.UUID(int=randomness.getrandbits(128), version=4)))


def check_record(record, require_id=True):
    """Raise RecordError naming the first violated invariant."""
    if require_id:
        if record.tagging_id is None:
            raise RecordError("tagging_id is missing")
        make_iri(record.tagging_id)
    if not isinstance(record.tagger, str) or not record.tagger.strip():
        raise RecordError("tagger must be a non-empty userID")
    if not isinstance(record.object, URIRef):
        raise RecordError(f"object must be an IRI: {record.object!r}")
    if not isinstance(record.date, MonthStamp):
        raise RecordError(f"date must be a MonthStamp: {record.date!r}")
    if record.vote is not None and (isinstance(record.vote, bool) or not isinstance(record.vote, int)
                                    or record.vote < 0):
        raise RecordError(f"vote must be a non-negative integer: {record.vote!r}")
    if record.entry_tag is not None and record.entry_tag not in record.tags:
        raise RecordError(f"entry_tag {record.entry_tag} is not one of the record's tags")


def record_to_triples(record, schema):
    check_record(record)
    node = record.tagging_id
    triples = [(node, schema.iri('hasTag'), tag) for tag in record.tags]
    if record.vote is not None:
        triples.append((node, schema.iri('hasVote'), Literal(str(record.vote))))
    triples.append((node, schema.iri('hasCreator'), Literal(record.tagger)))
    triples.append((node, schema.iri('hasObject'), record.object))
    if record.comment is not None:
        triples.append((node, schema.iri('hasComment'), Literal(record.comment)))
    triples.append((node, schema.iri('hasDate'), record.date.to_literal()))
    if record.source is not None:
        triples.append((record.object, schema.iri('hasSource'), record.source))
    if record.entry_tag is not None:
        triples.extend((record.entry_tag, schema.iri('hasRelatedTag'), tag)
                       for tag in record.tags if tag != record.entry_tag)
    return new_graph(triples)


def _optional(value):
    value = value.strip() if isinstance(value, str) else value
    return value or None


def read_records_csv(file_path):
    """Read tagging records (without ids) from a CSV table.

    Columns: tagger, object, date ('Mmm YY') and optionally tags (space
    separated tag IRIs), entry_tag, source, comment, vote.
    """
    records_df = load_csv(file_path)
    records = []
    for index, row in records_df.iterrows():
        try:
            vote = _optional(row.get('vote', ''))
            entry_tag = _optional(row.get('entry_tag', ''))
            source = _optional(row.get('source', ''))
            record = TaggingRecord(
                tagger=row['tagger'].strip(),
                object=make_iri(row['object'].strip()),
                date=MonthStamp.parse(row['date']),
                tags=tuple(make_iri(tag) for tag in row.get('tags', '').split()),
                entry_tag=make_iri(entry_tag) if entry_tag else None,
                source=make_iri(source) if source else None,
                comment=row.get('comment', '') or None,
                vote=int(vote) if vote is not None else None,
            )
        except (KeyError, ValueError) as e:
            raise RecordError(f"Row {index + 2} of {file_path}: {e}") from e
        check_record(record, require_id=False)
        records.append(record)
    logging.info(f"Read {len(records)} tagging records from {file_path}")
    return records
