"""
Query core: request parsing, canonical dedup keys and static tuple reach.
"""

from .ast import (
    Directive,
    EnumLiteral,
    Field,
    FragmentDefinition,
    FragmentSpread,
    InlineFragment,
    ObjectLiteral,
    OperationKind,
    QueryDocument,
    SelectionSet,
    Variable,
    VariableDefinition,
    resolve_value,
)
from .canonical import CanonicalKey, canonical_text, canonical_variables, canonicalize
from .parser import list_variables, parse_query
from .reach import check_selection, check_type_condition, reached_tuples, root_type_name

__all__ = [
    'CanonicalKey', 'Directive', 'EnumLiteral', 'Field', 'FragmentDefinition', 'FragmentSpread',
    'InlineFragment', 'ObjectLiteral', 'OperationKind', 'QueryDocument', 'SelectionSet',
    'Variable', 'VariableDefinition', 'canonical_text', 'canonical_variables', 'canonicalize',
    'check_selection', 'check_type_condition', 'list_variables', 'parse_query', 'reached_tuples',
    'resolve_value', 'root_type_name',
]
