"""Forward-chaining closure over the UTO rule set.

Rules, applied to a least fixpoint:
  inverse     r(x, y) => r'(y, x) for every declared inverse pair (both directions)
  symmetry    hasRelatedTag(a, b) => hasRelatedTag(b, a)
  transitive  r(a, b), r(b, c) => r(a, c) for transitive relations whose domain is
              their range; with symmetry every related tag also gets r(a, a)
  hub         hasObject(t, o), h(t, v) => h(o, v) for the hub-projected relations
              (hasTag, hasComment, hasVote)
Literals never become subjects, so inverse and hub rules skip them.
"""
from collections import defaultdict, deque

from rdflib import Literal

from store.model import new_graph


class _Rules:
    def __init__(self, schema):
        self.inverse = {}
        self.symmetric = set()
        self.transitive = set()
        self.hub = set()
        for relation in schema.relations:
            iri = schema.iri(relation.name)
            if relation.inverse_name:
                self.inverse[iri] = schema.iri(relation.inverse_name)
            if relation.symmetric:
                self.symmetric.add(iri)
            if relation.transitive and relation.forward and relation.domain == relation.range:
                self.transitive.add(iri)
            if relation.hub_projection:
                self.hub.add(iri)
        self.has_object = schema.iri('hasObject')


def infer_closure(g, schema):
    rules = _Rules(schema)
    closed = set(g)
    outgoing = defaultdict(set)
    incoming = defaultdict(set)
    for s, p, o in closed:
        outgoing[(p, s)].add(o)
        incoming[(p, o)].add(s)

    pending = deque(closed)

    def derive(triple):
        if triple not in closed:
            closed.add(triple)
            s, p, o = triple
            outgoing[(p, s)].add(o)
            incoming[(p, o)].add(s)
            pending.append(triple)

    while pending:
        s, p, o = pending.popleft()
        if p in rules.inverse and not isinstance(o, Literal):
            derive((o, rules.inverse[p], s))
        if p in rules.symmetric and not isinstance(o, Literal):
            derive((o, p, s))
        if p in rules.transitive:
            for z in list(outgoing[(p, o)]):
                derive((s, p, z))
            for x in list(incoming[(p, s)]):
                derive((x, p, o))
        if p == rules.has_object and not isinstance(o, Literal):
            for hub in rules.hub:
                for value in list(outgoing[(hub, s)]):
                    derive((o, hub, value))
        if p in rules.hub:
            for target in list(outgoing[(rules.has_object, s)]):
                if not isinstance(target, Literal):
                    derive((target, p, o))

    return new_graph(closed)
