"""Term, literal and graph helpers shared by every package.

A graph is an rdflib ``Graph`` used with set semantics. IRIs are ``URIRef``
values and literals are plain ``Literal`` values: the value kind of a literal
(plain, integer, monthstamp) follows from the predicate that carries it, so
the worked example's untyped ``"103"`` and ``"Jun 07"`` round-trip unchanged.
"""
import re
from dataclasses import dataclass
from enum import Enum
from urllib.parse import urlsplit

from rdflib import Graph, Literal, URIRef

from store.namespaces import UTO

MONTHS = ('Jan', 'Feb', 'Mar', 'Apr', 'May', 'Jun', 'Jul', 'Aug', 'Sep', 'Oct', 'Nov', 'Dec')
_MONTH_INDEX = {name.lower(): number for number, name in enumerate(MONTHS, start=1)}
_MONTHSTAMP_RE = re.compile(r'^([A-Za-z]{3}) (\d{2})$')
_INTEGER_RE = re.compile(r'^\d+$')
_IRI_FORBIDDEN = re.compile(r'[\s<>"{}|\\^`]')


class InvalidIRIError(ValueError):
    pass


class LiteralKind(Enum):
    PLAIN = 'plain'
    INTEGER = 'integer'
    MONTHSTAMP = 'monthstamp'


def make_iri(value):
    """Validate an absolute IRI and lowercase its scheme and host."""
    value = str(value)
    if not value or _IRI_FORBIDDEN.search(value):
        raise InvalidIRIError(f"Not a valid IRI: {value!r}")
    parts = urlsplit(value)
    if not parts.scheme:
        raise InvalidIRIError(f"IRI has no scheme: {value!r}")
    head = len(parts.scheme) + 1
    if value[head:head + 2] == '//':
        if not parts.netloc:
            raise InvalidIRIError(f"IRI has no host: {value!r}")
        rest = value[head + 2 + len(parts.netloc):]
        return URIRef(f"{parts.scheme}://{parts.netloc.lower()}{rest}")
    return URIRef(parts.scheme + value[len(parts.scheme):])


def is_iri(term):
    return isinstance(term, URIRef)


def new_graph(triples=()):
    graph = Graph()
    graph.bind('uto', UTO)
    for triple in triples:
        graph.add(triple)
    return graph


def literal_kind(predicate):
    if predicate == UTO.hasVote:
        return LiteralKind.INTEGER
    if predicate == UTO.hasDate:
        return LiteralKind.MONTHSTAMP
    return LiteralKind.PLAIN


def is_valid_lexical(kind, lexical):
    if kind is LiteralKind.INTEGER:
        return bool(_INTEGER_RE.match(lexical))
    if kind is LiteralKind.MONTHSTAMP:
        return is_monthstamp(lexical)
    return True


def is_monthstamp(text):
    match = _MONTHSTAMP_RE.match(str(text))
    return bool(match) and match.group(1).lower() in _MONTH_INDEX


@dataclass(frozen=True)
class MonthStamp:
    month: int
    year: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"Month out of range: {self.month}")
        if not 0 <= self.year <= 99:
            raise ValueError(f"Two-digit year out of range: {self.year}")

    @classmethod
    def parse(cls, text):
        match = _MONTHSTAMP_RE.match(str(text).strip())
        if not match or match.group(1).lower() not in _MONTH_INDEX:
            raise ValueError(f"Not a 'Mmm YY' date: {text!r}")
        return cls(_MONTH_INDEX[match.group(1).lower()], int(match.group(2)))

    @classmethod
    def from_date(cls, value):
        """Truncate anything with .month and .year (datetime, pandas Timestamp) to month level."""
        if not 2000 <= value.year <= 2099:
            raise ValueError(f"Year outside 2000-2099: {value.year}")
        return cls(value.month, value.year % 100)

    @property
    def full_year(self):
        return 2000 + self.year

    def to_literal(self):
        return Literal(str(self))

    def __str__(self):
        return f"{MONTHS[self.month - 1]} {self.year:02d}"
