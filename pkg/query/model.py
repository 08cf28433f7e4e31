from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Tuple, Union

from rdflib import Literal, URIRef

Term = Union[URIRef, Literal]


class QueryError(ValueError):
    pass


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self):
        return f"?{self.name}"


class Pattern(NamedTuple):
    subject: Union[Term, Variable]
    predicate: Union[Term, Variable]
    object: Union[Term, Variable]

    def variables(self):
        return {position.name for position in self if isinstance(position, Variable)}


@dataclass(frozen=True)
class OrderBy:
    variable: str
    numeric_cast: bool = False
    descending: bool = False


@dataclass(frozen=True)
class Query:
    select_vars: Tuple[str, ...]
    blocks: Tuple[Tuple[Pattern, ...], ...]
    distinct: bool = False
    order_by: Optional[OrderBy] = None

    def __post_init__(self):
        object.__setattr__(self, 'select_vars', tuple(self.select_vars))
        object.__setattr__(self, 'blocks', tuple(tuple(block) for block in self.blocks))
        if not self.blocks or any(not block for block in self.blocks):
            raise QueryError("A query needs at least one non-empty pattern block")
        if self.order_by is not None and self.order_by.variable not in self.select_vars:
            raise QueryError(f"ORDER BY variable must be selected: {self.order_by.variable}")
        needed = set(self.select_vars)
        for index, block in enumerate(self.blocks):
            bound = set().union(*(pattern.variables() for pattern in block))
            missing = needed - bound
            if missing:
                raise QueryError(f"Block {index} does not bind: {', '.join(sorted(missing))}")


@dataclass(frozen=True)
class Row(Mapping):
    """Projected result row; a read-only mapping from variable name to term."""
    variables: Tuple[str, ...]
    values: Tuple[Term, ...] = field(default=())

    def __getitem__(self, name):
        try:
            return self.values[self.variables.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def __iter__(self):
        return iter(self.variables)

    def __len__(self):
        return len(self.variables)
