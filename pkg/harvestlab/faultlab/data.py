"""
Seeded synthetic data that conforms to a schema.

Every generated value is a pure function of (seed, response path, field
name), so the value of a field that a query did not select can still be
computed when a fault trigger needs it.
"""

import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..exceptions import InvalidSchemaError
from ..query.ast import Field, FragmentSpread, SelectionSet, resolve_value
from ..schema.model import TYPENAME, RefKind, TypeKind, resolve_field

NULL_PROBABILITY = 0.25
LIST_SIZE_ARGUMENTS = ('first', 'last', 'limit')
MAX_LIST_SIZE = 10


@dataclass
class ResolvedField:
    response_key: str
    name: str
    field_def: Any
    arguments: Dict[str, Any]


@dataclass
class ResolvedObject:
    """One object in the response, with the concrete type it was resolved as."""

    type_name: str
    path: str
    value: Dict[str, Any]
    fields: List[ResolvedField] = field(default_factory=list)


@dataclass
class Resolution:
    schema: Any
    generator: 'DataGenerator'
    data: Optional[Dict[str, Any]]
    objects: List[ResolvedObject]
    status: int = 200
    errors: List[Dict[str, Any]] = field(default_factory=list)

    def body(self):
        document = {'data': self.data}
        if self.errors:
            document['errors'] = self.errors
        return document


class DataGenerator:
    def __init__(self, schema, seed=0, variables=None):
        self.schema = schema
        self.seed = seed
        self.variables = variables or {}

    def _rng(self, path):
        return random.Random(f"{self.seed}:{path}")

    def resolve(self, doc):
        """Resolve every field of a query document into synthetic data."""
        objects = []
        data = self._object(self.schema.query_type_name, doc.selection_set, doc, '', objects)
        return Resolution(self.schema, self, data, objects)

    def sibling(self, type_name, object_path, field_name):
        """The leaf value ``field_name`` has (or would have) on the object at ``object_path``."""
        type_def = self.schema.get(type_name)
        field_def = type_def.field(field_name) if type_def is not None else None
        if field_def is None:
            return None
        ref = field_def.type_ref
        non_null = ref.kind is RefKind.NON_NULL
        if non_null:
            ref = ref.of_type
        if ref.kind is not RefKind.NAMED or not self.schema.is_leaf(ref.name):
            return None
        return self._leaf(ref.name, non_null, _join(object_path, field_name), field_name)

    def _collect(self, type_name, selection_set, doc, collected):
        for selection in selection_set:
            if isinstance(selection, FragmentSpread):
                selection = doc.inline(selection)
            if isinstance(selection, Field):
                collected.setdefault(selection.response_key, []).append(selection)
                continue
            condition = selection.type_condition
            if condition is None or type_name in self.schema.possible_types(condition):
                self._collect(type_name, selection.selection_set, doc, collected)
        return collected

    def _object(self, type_name, selection_set, doc, path, objects):
        value = {}
        resolved = ResolvedObject(type_name, path, value)
        objects.append(resolved)
        for response_key, fields in self._collect(type_name, selection_set, doc, {}).items():
            first = fields[0]
            if first.name == TYPENAME:
                value[response_key] = type_name
                continue
            field_def = resolve_field(self.schema, type_name, first.name)
            arguments = {name: resolve_value(arg, self.variables) for name, arg in first.arguments}
            resolved.fields.append(ResolvedField(response_key, first.name, field_def, arguments))
            value[response_key] = self._value(
                field_def.type_ref, fields, arguments, _join(path, first.name), first.name, doc, objects,
            )
        return value

    def _value(self, type_ref, fields, arguments, path, field_name, doc, objects, non_null=False):
        if type_ref.kind is RefKind.NON_NULL:
            return self._value(type_ref.of_type, fields, arguments, path, field_name, doc, objects, True)
        if type_ref.kind is RefKind.LIST:
            size = self._list_size(arguments, path)
            return [
                self._value(type_ref.of_type, fields, None, f"{path}[{index}]", field_name, doc, objects)
                for index in range(size)
            ]
        if self.schema.is_leaf(type_ref.name):
            return self._leaf(type_ref.name, non_null, path, field_name)
        concrete = self._concrete(type_ref.name, path)
        if concrete is None:
            if non_null:
                raise InvalidSchemaError(f"Nothing implements {type_ref.name}, required at '{path}'")
            return None
        selection_set = SelectionSet(tuple(
            selection for selected in fields for selection in selected.selection_set
        ))
        return self._object(concrete, selection_set, doc, path, objects)

    def _list_size(self, arguments, path):
        for name in LIST_SIZE_ARGUMENTS:
            size = (arguments or {}).get(name)
            if isinstance(size, int) and not isinstance(size, bool):
                return max(0, min(size, MAX_LIST_SIZE))
        return self._rng(f"{path}#size").randint(1, 3)

    def _concrete(self, type_name, path):
        possible = sorted(self.schema.possible_types(type_name))
        if not possible:
            return None
        if len(possible) == 1:
            return possible[0]
        return self._rng(f"{path}#type").choice(possible)

    def _leaf(self, type_name, non_null, path, field_name):
        rng = self._rng(path)
        if not non_null and rng.random() < NULL_PROBABILITY:
            return None
        if type_name == 'String':
            return f"{field_name} {rng.randint(1, 999)}"
        if type_name == 'ID':
            return str(rng.randint(1, 99999))
        if type_name == 'Int':
            return rng.randint(0, 1000)
        if type_name == 'Float':
            return round(rng.uniform(0, 1000), 2)
        if type_name == 'Boolean':
            return rng.random() < 0.5
        type_def = self.schema.get(type_name)
        if type_def is not None and type_def.kind is TypeKind.ENUM:
            return rng.choice(type_def.enum_values)
        # custom scalars are opaque
        return f"{type_name}:{rng.randint(1, 99999)}"


def _join(path, name):
    return f"{path}.{name}" if path else name


def conformant_response(schema, doc, seed, variables=None):
    """A response document that every oracle derived for ``doc`` accepts."""
    return DataGenerator(schema, seed, variables).resolve(doc).body()
