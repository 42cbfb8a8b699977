"""Parsing of GraphQL request documents into the harvestlab AST."""

from graphql import GraphQLSyntaxError, OperationType, parse
from graphql.language import (
    BooleanValueNode,
    EnumValueNode,
    FieldNode,
    FloatValueNode,
    FragmentDefinitionNode,
    FragmentSpreadNode,
    InlineFragmentNode,
    IntValueNode,
    ListTypeNode,
    ListValueNode,
    NonNullTypeNode,
    NullValueNode,
    ObjectValueNode,
    OperationDefinitionNode,
    StringValueNode,
    VariableNode,
)

from ..exceptions import (
    DocumentSyntaxError,
    FragmentCycleError,
    OperationSelectionError,
    UndeclaredVariableError,
    UndefinedFragmentError,
    UnsupportedOperationError,
)
from ..schema.model import TypeRef
from ..schema.sdl import syntax_error
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
)

_OPERATION_KINDS = {
    OperationType.QUERY: OperationKind.QUERY,
    OperationType.MUTATION: OperationKind.MUTATION,
}


def _value(node):
    if isinstance(node, VariableNode):
        return Variable(node.name.value)
    if isinstance(node, IntValueNode):
        return int(node.value)
    if isinstance(node, FloatValueNode):
        return float(node.value)
    if isinstance(node, (StringValueNode, BooleanValueNode)):
        return node.value
    if isinstance(node, NullValueNode):
        return None
    if isinstance(node, EnumValueNode):
        return EnumLiteral(node.value)
    if isinstance(node, ListValueNode):
        return tuple(_value(item) for item in node.values)
    if isinstance(node, ObjectValueNode):
        return ObjectLiteral(tuple((f.name.value, _value(f.value)) for f in node.fields))
    raise DocumentSyntaxError(f"Unsupported value literal {node.kind}")


def _arguments(nodes):
    return tuple((node.name.value, _value(node.value)) for node in nodes or ())


def _directives(nodes):
    return tuple(Directive(node.name.value, _arguments(node.arguments)) for node in nodes or ())


def _type_ref(node):
    if isinstance(node, NonNullTypeNode):
        return TypeRef.non_null(_type_ref(node.type))
    if isinstance(node, ListTypeNode):
        return TypeRef.list_of(_type_ref(node.type))
    return TypeRef.named(node.name.value)


def _selection_set(node):
    selections = []
    for selection in node.selections:
        if isinstance(selection, FieldNode):
            selections.append(Field(
                name=selection.name.value,
                alias=selection.alias.value if selection.alias else None,
                arguments=_arguments(selection.arguments),
                selection_set=_selection_set(selection.selection_set) if selection.selection_set else None,
                directives=_directives(selection.directives),
            ))
        elif isinstance(selection, FragmentSpreadNode):
            selections.append(FragmentSpread(selection.name.value, _directives(selection.directives)))
        elif isinstance(selection, InlineFragmentNode):
            selections.append(InlineFragment(
                type_condition=selection.type_condition.name.value if selection.type_condition else None,
                selection_set=_selection_set(selection.selection_set),
                directives=_directives(selection.directives),
            ))
    return SelectionSet(tuple(selections))


def _select_operation(operations, operation_name):
    if not operations:
        raise OperationSelectionError("Document contains no operation")
    if operation_name is None:
        if len(operations) > 1:
            raise OperationSelectionError(
                "Document contains several operations; an operation name is required"
            )
        return operations[0]
    for operation in operations:
        if operation.name and operation.name.value == operation_name:
            return operation
    raise OperationSelectionError(f"Document has no operation named '{operation_name}'")


def _spreads(selection_set):
    for selection in selection_set:
        if isinstance(selection, FragmentSpread):
            yield selection.name
        elif isinstance(selection, Field) and selection.selection_set:
            yield from _spreads(selection.selection_set)
        elif isinstance(selection, InlineFragment):
            yield from _spreads(selection.selection_set)


def _check_fragments(selection_set, fragments):
    for name in _spreads(selection_set):
        if name not in fragments:
            raise UndefinedFragmentError(name)
    for fragment in fragments.values():
        for name in _spreads(fragment.selection_set):
            if name not in fragments:
                raise UndefinedFragmentError(name)

    done = set()

    def visit(name, trail):
        if name in trail:
            raise FragmentCycleError(trail[trail.index(name):] + [name])
        if name in done:
            return
        trail.append(name)
        for child in _spreads(fragments[name].selection_set):
            visit(child, trail)
        trail.pop()
        done.add(name)

    for name in fragments:
        visit(name, [])


def _used_variables(value):
    if isinstance(value, Variable):
        yield value.name
    elif isinstance(value, tuple):
        for item in value:
            yield from _used_variables(item)
    elif isinstance(value, ObjectLiteral):
        for _name, item in value.fields:
            yield from _used_variables(item)


def _variables_in(selection_set, fragments, seen_fragments):
    for selection in selection_set:
        for directive in selection.directives:
            for _name, value in directive.arguments:
                yield from _used_variables(value)
        if isinstance(selection, Field):
            for _name, value in selection.arguments:
                yield from _used_variables(value)
            if selection.selection_set:
                yield from _variables_in(selection.selection_set, fragments, seen_fragments)
        elif isinstance(selection, InlineFragment):
            yield from _variables_in(selection.selection_set, fragments, seen_fragments)
        elif selection.name not in seen_fragments:
            seen_fragments.add(selection.name)
            yield from _variables_in(fragments[selection.name].selection_set, fragments, seen_fragments)


def parse_query(text, operation_name=None):
    """Parse a request document and return the selected operation.

    Schema-independent checks happen here (fragments defined and acyclic,
    variables declared); checks against a schema are left to the consumers.
    """
    try:
        document = parse(text)
    except GraphQLSyntaxError as exc:
        raise syntax_error(exc) from exc

    operations = []
    fragments = {}
    for definition in document.definitions:
        if isinstance(definition, OperationDefinitionNode):
            operations.append(definition)
        elif isinstance(definition, FragmentDefinitionNode):
            name = definition.name.value
            if name in fragments:
                raise DocumentSyntaxError(f"Fragment '{name}' is defined more than once")
            fragments[name] = FragmentDefinition(
                name, definition.type_condition.name.value, _selection_set(definition.selection_set)
            )
        else:
            raise DocumentSyntaxError(
                f"Request documents may only hold operations and fragments, found {definition.kind}"
            )

    operation = _select_operation(operations, operation_name)
    if operation.operation not in _OPERATION_KINDS:
        raise UnsupportedOperationError(f"{operation.operation.value} operations are not supported")

    selection_set = _selection_set(operation.selection_set)
    _check_fragments(selection_set, fragments)

    variable_definitions = tuple(
        VariableDefinition(
            name=node.variable.name.value,
            type_ref=_type_ref(node.type),
            has_default=node.default_value is not None,
            default=_value(node.default_value) if node.default_value is not None else None,
        )
        for node in operation.variable_definitions or ()
    )
    declared = {definition.name for definition in variable_definitions}
    directives = _directives(operation.directives)
    for directive in directives:
        for _name, value in directive.arguments:
            for used in _used_variables(value):
                if used not in declared:
                    raise UndeclaredVariableError(used)
    for used in _variables_in(selection_set, fragments, set()):
        if used not in declared:
            raise UndeclaredVariableError(used)

    return QueryDocument(
        operation_kind=_OPERATION_KINDS[operation.operation],
        operation_name=operation.name.value if operation.name else None,
        variable_definitions=variable_definitions,
        selection_set=selection_set,
        fragments=fragments,
        directives=directives,
    )


def list_variables(doc):
    """Declared variables as ``(name, type_ref, required)`` in declaration order."""
    return [
        (definition.name, definition.type_ref, definition.required)
        for definition in doc.variable_definitions
    ]
