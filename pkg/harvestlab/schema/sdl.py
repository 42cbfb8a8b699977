"""SDL ingestion and the canonical SDL printer."""

import logging

from graphql import (
    GraphQLError,
    GraphQLSyntaxError,
    build_ast_schema,
    is_enum_type,
    is_input_object_type,
    is_interface_type,
    is_introspection_type,
    is_list_type,
    is_non_null_type,
    is_object_type,
    is_specified_scalar_type,
    is_union_type,
    parse,
    print_ast,
    validate_schema,
)
from graphql.language import (
    DocumentNode,
    SchemaExtensionNode,
    TypeDefinitionNode,
    TypeExtensionNode,
    Visitor,
    visit,
)
from graphql.pyutils import Undefined
from graphql.utilities import ast_from_value

from ..exceptions import (
    DocumentSyntaxError,
    DuplicateTypeError,
    InvalidSchemaError,
    UnresolvedTypeError,
)
from .model import (
    BUILTIN_SCALARS,
    ArgumentDef,
    FieldDef,
    SchemaModel,
    TypeDef,
    TypeKind,
    TypeRef,
)

logger = logging.getLogger(__name__)


def syntax_error(exc):
    """Translate a graphql-core syntax error into a positioned DocumentSyntaxError."""
    location = exc.locations[0] if exc.locations else None
    return DocumentSyntaxError(
        exc.message,
        line=location.line if location else None,
        column=location.column if location else None,
    )


class _NamedTypeCollector(Visitor):
    def __init__(self):
        super().__init__()
        self.names = []

    def enter_named_type(self, node, *_args):
        self.names.append(node.name.value)


def _check_declarations(definitions):
    declared = set()
    for definition in definitions:
        if isinstance(definition, TypeDefinitionNode):
            name = definition.name.value
            if name in declared:
                raise DuplicateTypeError(name)
            declared.add(name)

    for definition in definitions:
        collector = _NamedTypeCollector()
        visit(definition, collector)
        owner = getattr(definition, 'name', None)
        for name in collector.names:
            if name not in declared and name not in BUILTIN_SCALARS:
                raise UnresolvedTypeError(name, referenced_by=owner.value if owner else 'schema')


def parse_sdl(sdl_text):
    """Parse SDL text into a SchemaModel.

    Directives are accepted and ignored; type and schema extensions are
    parsed and then dropped.
    """
    try:
        document = parse(sdl_text)
    except GraphQLSyntaxError as exc:
        raise syntax_error(exc) from exc

    definitions = tuple(
        definition for definition in document.definitions
        if not isinstance(definition, (TypeExtensionNode, SchemaExtensionNode))
    )
    if len(definitions) != len(document.definitions):
        logger.info("Ignoring %d schema extension(s)", len(document.definitions) - len(definitions))
    _check_declarations(definitions)

    try:
        gql_schema = build_ast_schema(DocumentNode(definitions=definitions), assume_valid_sdl=True)
    except (TypeError, GraphQLError) as exc:
        raise InvalidSchemaError(str(exc)) from exc
    if gql_schema.query_type is None:
        raise InvalidSchemaError("Schema declares no query root type")
    errors = validate_schema(gql_schema)
    if errors:
        raise InvalidSchemaError('; '.join(error.message for error in errors))
    return from_graphql_schema(gql_schema)


def _type_ref(gql_type):
    if is_non_null_type(gql_type):
        return TypeRef.non_null(_type_ref(gql_type.of_type))
    if is_list_type(gql_type):
        return TypeRef.list_of(_type_ref(gql_type.of_type))
    return TypeRef.named(gql_type.name)


def _default_literal(value, gql_type):
    if value is Undefined:
        return None
    node = ast_from_value(value, gql_type)
    return print_ast(node) if node is not None else None


def _field_defs(gql_fields):
    return tuple(
        FieldDef(
            name=name,
            type_ref=_type_ref(gql_field.type),
            arguments=tuple(
                ArgumentDef(
                    name=arg_name,
                    type_ref=_type_ref(arg.type),
                    required=is_non_null_type(arg.type) and arg.default_value is Undefined,
                    default=_default_literal(arg.default_value, arg.type),
                )
                for arg_name, arg in gql_field.args.items()
            ),
        )
        for name, gql_field in gql_fields.items()
    )


def _type_def(gql_type):
    name = gql_type.name
    if is_object_type(gql_type):
        return TypeDef(
            name, TypeKind.OBJECT,
            fields=_field_defs(gql_type.fields),
            implemented_interfaces=tuple(i.name for i in gql_type.interfaces),
        )
    if is_interface_type(gql_type):
        return TypeDef(
            name, TypeKind.INTERFACE,
            fields=_field_defs(gql_type.fields),
            implemented_interfaces=tuple(i.name for i in gql_type.interfaces),
        )
    if is_union_type(gql_type):
        return TypeDef(name, TypeKind.UNION, union_members=tuple(t.name for t in gql_type.types))
    if is_enum_type(gql_type):
        return TypeDef(name, TypeKind.ENUM, enum_values=tuple(gql_type.values))
    if is_input_object_type(gql_type):
        return TypeDef(
            name, TypeKind.INPUT_OBJECT,
            fields=tuple(
                FieldDef(
                    name=field_name,
                    type_ref=_type_ref(input_field.type),
                    default=_default_literal(input_field.default_value, input_field.type),
                )
                for field_name, input_field in gql_type.fields.items()
            ),
        )
    return TypeDef(name, TypeKind.SCALAR)


def from_graphql_schema(gql_schema):
    """Convert a graphql-core schema into the immutable SchemaModel."""
    types = {
        name: _type_def(gql_type)
        for name, gql_type in gql_schema.type_map.items()
        if not is_introspection_type(gql_type) and not is_specified_scalar_type(gql_type)
    }
    return SchemaModel(
        types=types,
        query_type_name=gql_schema.query_type.name,
        mutation_type_name=gql_schema.mutation_type.name if gql_schema.mutation_type else None,
        subscription_type_name=(
            gql_schema.subscription_type.name if gql_schema.subscription_type else None
        ),
    )


def _render_arguments(arguments):
    if not arguments:
        return ''
    rendered = []
    for arg in arguments:
        text = f"{arg.name}: {arg.type_ref}"
        if arg.default is not None:
            text += f" = {arg.default}"
        rendered.append(text)
    return f"({', '.join(rendered)})"


def _render_fields(fields):
    if not fields:
        return ''
    lines = []
    for field_def in fields:
        line = f"  {field_def.name}{_render_arguments(field_def.arguments)}: {field_def.type_ref}"
        if field_def.default is not None:
            line += f" = {field_def.default}"
        lines.append(line)
    return ' {\n' + '\n'.join(lines) + '\n}'


def render_sdl(schema):
    """Print ``schema`` as SDL that ``parse_sdl`` reads back into an equal model."""
    roots = [f"  query: {schema.query_type_name}"]
    if schema.mutation_type_name:
        roots.append(f"  mutation: {schema.mutation_type_name}")
    if schema.subscription_type_name:
        roots.append(f"  subscription: {schema.subscription_type_name}")
    blocks = ['schema {\n' + '\n'.join(roots) + '\n}']

    for type_def in schema.types.values():
        implements = ''
        if type_def.implemented_interfaces:
            implements = ' implements ' + ' & '.join(type_def.implemented_interfaces)
        if type_def.kind is TypeKind.OBJECT:
            blocks.append(f"type {type_def.name}{implements}{_render_fields(type_def.fields)}")
        elif type_def.kind is TypeKind.INTERFACE:
            blocks.append(f"interface {type_def.name}{implements}{_render_fields(type_def.fields)}")
        elif type_def.kind is TypeKind.INPUT_OBJECT:
            blocks.append(f"input {type_def.name}{_render_fields(type_def.fields)}")
        elif type_def.kind is TypeKind.UNION:
            blocks.append(f"union {type_def.name} = {' | '.join(type_def.union_members)}")
        elif type_def.kind is TypeKind.ENUM:
            values = '\n'.join(f"  {value}" for value in type_def.enum_values)
            blocks.append(f"enum {type_def.name} {{\n{values}\n}}")
        else:
            blocks.append(f"scalar {type_def.name}")
    return '\n\n'.join(blocks) + '\n'


def to_graphql_schema(schema):
    """Build an executable graphql-core schema (used to answer introspection)."""
    return build_ast_schema(parse(render_sdl(schema)), assume_valid_sdl=True)
