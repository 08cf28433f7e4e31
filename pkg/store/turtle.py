"""Canonical Turtle writer and an rdflib-backed Turtle reader.

The writer is deterministic: subjects sorted, predicates in schema declaration
order (rdf:type first, unknown predicates last and sorted), objects sorted,
same-subject statements joined with ';' and repeated objects with ','.
"""
import re

from rdflib import BNode, Graph, Literal, URIRef
from rdflib.namespace import RDF

from ontology.schema import load_schema
from store.model import new_graph
from store.namespaces import PREFIXES
from store.tags import tag_namespaces

_LOCAL_NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_-]*$')
# Quoted strings are matched first so that '<' inside a literal is left alone.
_IRI_REF_RE = re.compile(r'"(?:[^"\\\n]|\\.)*"|<\s*([^<>"\s]*)\s*>')
_ESCAPES = {'\\': '\\\\', '"': '\\"', '\n': '\\n', '\r': '\\r', '\t': '\\t'}


class TurtleSyntaxError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _escape(text):
    return ''.join(_ESCAPES.get(char, char) for char in text)


class _TermWriter:
    def __init__(self):
        self.namespaces = dict(PREFIXES)
        self.optional = tag_namespaces()
        self.used_optional = set()

    def iri(self, term):
        value = str(term)
        for namespaces, optional in ((self.namespaces, False), (self.optional, True)):
            for prefix, namespace in namespaces.items():
                local = value[len(namespace):]
                if value.startswith(namespace) and _LOCAL_NAME_RE.match(local):
                    if optional:
                        self.used_optional.add(prefix)
                    return f"{prefix}:{local}"
        return f"<{value}>"

    def term(self, term):
        if isinstance(term, Literal):
            return f'"{_escape(str(term))}"'
        if isinstance(term, BNode):
            raise ValueError("Blank nodes are not supported")
        return self.iri(term)

    def header(self):
        lines = [f"@prefix {prefix}: <{namespace}> ." for prefix, namespace in self.namespaces.items()]
        lines += [f"@prefix {prefix}: <{self.optional[prefix]}> ." for prefix in sorted(self.used_optional)]
        return '\n'.join(lines) + '\n'


def _object_key(term):
    return (0 if isinstance(term, URIRef) else 1, str(term))


def serialize_turtle(g):
    order = {iri: index for index, iri in enumerate(load_schema().predicate_order())}

    def predicate_key(predicate):
        if predicate == RDF.type:
            return (-1, '')
        return (order.get(predicate, len(order)), str(predicate))

    by_subject = {}
    for s, p, o in g:
        by_subject.setdefault(s, {}).setdefault(p, []).append(o)

    writer = _TermWriter()
    blocks = []
    for subject in sorted(by_subject, key=str):
        statements = []
        for predicate in sorted(by_subject[subject], key=predicate_key):
            verb = 'a' if predicate == RDF.type else writer.iri(predicate)
            objects = ', '.join(writer.term(o) for o in sorted(by_subject[subject][predicate], key=_object_key))
            statements.append(f"    {verb} {objects}")
        blocks.append(writer.term(subject) + '\n' + ' ;\n'.join(statements) + ' .\n')

    # The header is written last so it only declares the tag prefixes actually used.
    return '\n'.join([writer.header()] + blocks)


def _tidy_iri_refs(text):
    """Trim whitespace inside <...> IRIs, e.g. the '< http://...>' subjects of hand-written examples."""
    def repl(match):
        if match.group(0).startswith('"'):
            return match.group(0)
        return f"<{match.group(1)}>"
    return _IRI_REF_RE.sub(repl, text)


def parse_turtle(text):
    graph = new_graph()
    if not text.strip():
        return graph
    try:
        parsed = Graph().parse(data=_tidy_iri_refs(text), format='turtle')
    except SyntaxError as e:
        # rdflib's BadSyntax counts lines from zero.
        lines = getattr(e, 'lines', None)
        message = getattr(e, '_why', None) or str(e)
        raise TurtleSyntaxError(message, line=lines + 1 if lines is not None else None) from e
    except Exception as e:
        raise TurtleSyntaxError(str(e)) from e

    for s, p, o in parsed:
        if isinstance(s, BNode) or isinstance(o, BNode):
            raise TurtleSyntaxError("blank nodes are not supported")
        graph.add((s, p, Literal(str(o)) if isinstance(o, Literal) else o))
    return graph
