"""Request-document AST.

Literal values are plain Python values (``int``, ``float``, ``str``,
``bool``, ``None``, tuples for lists, ``ObjectLiteral`` for input objects)
plus ``EnumLiteral`` and ``Variable`` for the two GraphQL-only forms.
"""

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Any, Mapping, Optional, Tuple, Union

from ..schema.model import TypeRef


class OperationKind(str, Enum):
    QUERY = 'QUERY'
    MUTATION = 'MUTATION'


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class EnumLiteral:
    value: str


@dataclass(frozen=True)
class ObjectLiteral:
    fields: Tuple[Tuple[str, Any], ...]


@dataclass(frozen=True)
class Directive:
    name: str
    arguments: Tuple[Tuple[str, Any], ...] = ()


@dataclass(frozen=True)
class SelectionSet:
    selections: Tuple['Selection', ...]

    def __iter__(self):
        return iter(self.selections)

    def __len__(self):
        return len(self.selections)


@dataclass(frozen=True)
class Field:
    name: str
    alias: Optional[str] = None
    arguments: Tuple[Tuple[str, Any], ...] = ()
    selection_set: Optional[SelectionSet] = None
    directives: Tuple[Directive, ...] = ()

    @property
    def response_key(self):
        return self.alias or self.name

    def argument(self, name, default=None):
        for arg_name, value in self.arguments:
            if arg_name == name:
                return value
        return default


@dataclass(frozen=True)
class FragmentSpread:
    name: str
    directives: Tuple[Directive, ...] = ()


@dataclass(frozen=True)
class InlineFragment:
    type_condition: Optional[str]
    selection_set: SelectionSet
    directives: Tuple[Directive, ...] = ()


Selection = Union[Field, FragmentSpread, InlineFragment]


@dataclass(frozen=True)
class FragmentDefinition:
    name: str
    type_condition: str
    selection_set: SelectionSet


@dataclass(frozen=True)
class VariableDefinition:
    name: str
    type_ref: TypeRef
    has_default: bool = False
    default: Any = None

    @property
    def required(self):
        return self.type_ref.is_non_null


@dataclass(frozen=True)
class QueryDocument:
    operation_kind: OperationKind
    operation_name: Optional[str]
    variable_definitions: Tuple[VariableDefinition, ...]
    selection_set: SelectionSet
    fragments: Mapping[str, FragmentDefinition] = field(default_factory=dict)
    directives: Tuple[Directive, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'fragments', MappingProxyType(dict(self.fragments)))

    def inline(self, spread):
        """The inline fragment equivalent to a fragment spread."""
        fragment = self.fragments[spread.name]
        return InlineFragment(fragment.type_condition, fragment.selection_set, spread.directives)


def resolve_value(value, variables):
    """Substitute variables inside a literal, yielding a JSON-like value."""
    if isinstance(value, Variable):
        return (variables or {}).get(value.name)
    if isinstance(value, EnumLiteral):
        return value.value
    if isinstance(value, ObjectLiteral):
        return {name: resolve_value(inner, variables) for name, inner in value.fields}
    if isinstance(value, tuple):
        return [resolve_value(inner, variables) for inner in value]
    return value
