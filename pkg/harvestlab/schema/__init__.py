"""
Schema core: GraphQL type-system model, SDL and introspection ingestion,
and the tuple universe used for coverage.
"""

from .introspection import fetch_introspection, ingest_introspection, load_schema
from .model import (
    BUILTIN_SCALARS,
    TYPENAME,
    ArgumentDef,
    FieldDef,
    RefKind,
    SchemaModel,
    SchemaTuple,
    TypeDef,
    TypeKind,
    TypeRef,
    resolve_field,
    tuple_universe,
)
from .sdl import parse_sdl, render_sdl, to_graphql_schema

__all__ = [
    'BUILTIN_SCALARS', 'TYPENAME', 'ArgumentDef', 'FieldDef', 'RefKind', 'SchemaModel',
    'SchemaTuple', 'TypeDef', 'TypeKind', 'TypeRef', 'fetch_introspection',
    'ingest_introspection', 'load_schema', 'parse_sdl', 'render_sdl', 'resolve_field',
    'to_graphql_schema', 'tuple_universe',
]
