"""Static schema analysis of request documents."""

from ..exceptions import InvalidSelectionError, UnknownFieldError, UnresolvedTypeError
from ..schema.model import TYPENAME, SchemaTuple, resolve_field
from .ast import Field, FragmentSpread, OperationKind


def root_type_name(schema, doc):
    if doc.operation_kind is OperationKind.MUTATION:
        if not schema.mutation_type_name:
            raise UnknownFieldError('Mutation', '*', 'schema declares no mutation root')
        return schema.mutation_type_name
    return schema.query_type_name


def check_selection(schema, field_def, field, path):
    """A leaf field must not have a selection set; a composite one must."""
    leaf = schema.is_leaf(field_def.type_ref.named_type)
    if leaf and field.selection_set is not None:
        raise InvalidSelectionError(f"Leaf field '{path}' cannot have a selection set")
    if not leaf and field.selection_set is None:
        raise InvalidSelectionError(f"Field '{path}' of type {field_def.type_ref} needs a selection set")


def check_type_condition(schema, type_name):
    type_def = schema.get(type_name)
    if type_def is None:
        raise UnresolvedTypeError(type_name, referenced_by='type condition')
    if not type_def.is_composite:
        raise InvalidSelectionError(f"Type condition '{type_name}' is not an object, interface or union")


def reached_tuples(doc, schema):
    """Tuples ``{o, f}`` for every field ``f`` the document selects on static parent ``o``."""
    reached = set()
    _walk(doc.selection_set, root_type_name(schema, doc), (), doc, schema, reached)
    return frozenset(reached)


def _walk(selection_set, parent, path, doc, schema, reached):
    for selection in selection_set:
        if isinstance(selection, FragmentSpread):
            selection = doc.inline(selection)
        if isinstance(selection, Field):
            field_path = path + (selection.response_key,)
            field_def = resolve_field(schema, parent, selection.name, path='.'.join(field_path))
            check_selection(schema, field_def, selection, '.'.join(field_path))
            if selection.name != TYPENAME:
                reached.add(SchemaTuple(parent, selection.name))
            if selection.selection_set is not None:
                _walk(selection.selection_set, field_def.type_ref.named_type, field_path, doc, schema, reached)
        else:
            condition = selection.type_condition or parent
            check_type_condition(schema, condition)
            _walk(selection.selection_set, condition, path, doc, schema, reached)
