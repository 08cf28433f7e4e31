import re
from functools import cmp_to_key

from rdflib import URIRef

from query.model import Row, Variable

_INTEGER_RE = re.compile(r'^[+-]?\d+$')


def _resolve(position, binding):
    if isinstance(position, Variable):
        return binding.get(position.name)
    return position


def _extend(binding, pattern, triple):
    extended = dict(binding)
    for position, term in zip(pattern, triple):
        if isinstance(position, Variable):
            bound = extended.get(position.name)
            if bound is None:
                extended[position.name] = term
            elif bound != term:
                return None
    return extended


def match_bgp(patterns, g):
    """All variable bindings under which every pattern is a triple of g (natural join)."""
    bindings = [{}]
    for pattern in patterns:
        joined = []
        for binding in bindings:
            s, p, o = (_resolve(position, binding) for position in pattern)
            for triple in g.triples((s, p, o)):
                extended = _extend(binding, pattern, triple)
                if extended is not None:
                    joined.append(extended)
        bindings = joined
        if not bindings:
            break
    return bindings


def term_key(term):
    return (0 if isinstance(term, URIRef) else 1, str(term))


def _row_key(row):
    return tuple(term_key(value) for value in row.values)


def _order_comparator(order_by):
    def numeric(term):
        text = str(term)
        return int(text) if _INTEGER_RE.match(text) else None

    def compare(left, right):
        a, b = left[order_by.variable], right[order_by.variable]
        if order_by.numeric_cast:
            a, b = numeric(a), numeric(b)
            # Rows whose value does not parse sort after every numeric row, in either direction.
            if a is None or b is None:
                if a is None and b is None:
                    a, b = term_key(left[order_by.variable]), term_key(right[order_by.variable])
                else:
                    return 1 if a is None else -1
        else:
            a, b = term_key(a), term_key(b)
        if a != b:
            result = -1 if a < b else 1
            return -result if order_by.descending else result
        rest_left, rest_right = _row_key(left), _row_key(right)
        return (rest_left > rest_right) - (rest_left < rest_right)

    return compare


def evaluate(query, g):
    """Evaluate a Query: union of blocks, projection, optional distinct, deterministic ordering.

    Without ORDER BY rows are sorted on the full projected row; with ORDER BY,
    ties fall back to the full projected row.
    """
    rows = []
    for block in query.blocks:
        for binding in match_bgp(block, g):
            rows.append(Row(query.select_vars, tuple(binding[name] for name in query.select_vars)))

    if query.distinct:
        rows = list(set(rows))

    rows.sort(key=_row_key)
    if query.order_by is not None:
        rows.sort(key=cmp_to_key(_order_comparator(query.order_by)))
    return rows
