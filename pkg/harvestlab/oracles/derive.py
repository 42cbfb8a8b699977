"""Oracle derivation: map each selected field onto its schema contract."""

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from ..exceptions import UnsupportedOperationError
from ..query.ast import Field, FragmentSpread, OperationKind
from ..query.reach import check_selection, check_type_condition
from ..schema.model import TYPENAME, RefKind, TypeKind, TypeRef, resolve_field
from .checks import (
    FORMAT_CHECKS,
    IS_LIST,
    IS_MAP,
    NOT_NULL,
    PRESENT,
    Check,
    CheckKind,
    leaf_check,
)


@dataclass(frozen=True)
class FieldOracle:
    """Expectations for one selected field.

    ``checks`` apply to the field value (PRESENT first); ``item_checks`` hold
    one tuple per list nesting level. ``applies_to`` is set when the field was
    selected through a fragment that narrows the runtime type, and names the
    concrete types for which the oracle holds.
    """

    response_key: str
    field_name: str
    parent_type: str
    declared_type: TypeRef
    checks: Tuple[Check, ...]
    item_checks: Tuple[Tuple[Check, ...], ...] = ()
    children: Tuple['FieldOracle', ...] = ()
    expected_typename: Optional[str] = None
    applies_to: Optional[Tuple[str, ...]] = None

    @property
    def is_typename(self):
        return self.field_name == TYPENAME

    @property
    def label(self):
        return f"{self.parent_type}.{self.field_name}"

    def to_dict(self):
        data = {
            'key': self.response_key,
            'field': self.field_name,
            'parent_type': self.parent_type,
            'type': str(self.declared_type),
            'checks': [check.to_dict() for check in self.checks],
        }
        if self.item_checks:
            data['item_checks'] = [[check.to_dict() for check in level] for level in self.item_checks]
        if self.children:
            data['children'] = [child.to_dict() for child in self.children]
        if self.expected_typename is not None:
            data['expected_typename'] = self.expected_typename
        if self.applies_to is not None:
            data['applies_to'] = list(self.applies_to)
        return data

    @classmethod
    def from_dict(cls, data):
        applies_to = data.get('applies_to')
        return cls(
            response_key=data['key'],
            field_name=data['field'],
            parent_type=data['parent_type'],
            declared_type=TypeRef.parse(data['type']),
            checks=tuple(Check.from_dict(check) for check in data['checks']),
            item_checks=tuple(
                tuple(Check.from_dict(check) for check in level) for level in data.get('item_checks', ())
            ),
            children=tuple(cls.from_dict(child) for child in data.get('children', ())),
            expected_typename=data.get('expected_typename'),
            applies_to=tuple(applies_to) if applies_to is not None else None,
        )


@dataclass(frozen=True)
class OracleTree:
    root: Tuple[FieldOracle, ...]
    format_oracles: Tuple[Check, ...] = FORMAT_CHECKS

    def walk(self):
        stack = list(reversed(self.root))
        while stack:
            oracle = stack.pop()
            yield oracle
            stack.extend(reversed(oracle.children))

    def to_dict(self):
        return {
            'format': [check.to_dict() for check in self.format_oracles],
            'root': [oracle.to_dict() for oracle in self.root],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            root=tuple(FieldOracle.from_dict(oracle) for oracle in data['root']),
            format_oracles=tuple(Check.from_dict(check) for check in data.get('format', ())) or FORMAT_CHECKS,
        )


def _level_checks(schema, type_ref):
    """Split a wrapped type into per-level checks, outermost level first."""
    levels = []
    ref = type_ref
    while True:
        checks = []
        if ref.kind is RefKind.NON_NULL:
            checks.append(NOT_NULL)
            ref = ref.of_type
        if ref.kind is RefKind.LIST:
            checks.append(IS_LIST)
            levels.append(tuple(checks))
            ref = ref.of_type
            continue
        if schema.is_leaf(ref.name):
            check = leaf_check(schema, ref.name)
            if check is not None:
                checks.append(check)
        elif not levels:
            # list elements get no map check; their children's PRESENT checks cover them
            checks.append(IS_MAP)
        levels.append(tuple(checks))
        return levels


def _typename_check(schema, parent):
    type_def = schema.get(parent)
    if type_def is not None and type_def.kind is TypeKind.OBJECT:
        return Check(CheckKind.TYPENAME_EQUALS, (parent,)), parent
    return Check(CheckKind.TYPENAME_IN, tuple(sorted(schema.possible_types(parent)))), None


def _narrow(schema, object_type, applies_to, condition):
    """Concrete types a fragment leaves in scope; None means no narrowing."""
    everything = schema.possible_types(object_type)
    current = set(applies_to) if applies_to is not None else set(everything)
    remaining = current & schema.possible_types(condition)
    if remaining == set(everything):
        return None
    return tuple(sorted(remaining))


def _merge(oracles):
    merged = {}
    for oracle in oracles:
        slot = (oracle.response_key, oracle.applies_to)
        if slot in merged:
            existing = merged[slot]
            merged[slot] = replace(existing, children=_merge(existing.children + oracle.children))
        else:
            merged[slot] = oracle
    return tuple(merged.values())


def _derive(schema, doc, selection_set, object_type, parent, applies_to, path):
    oracles = []
    for selection in selection_set:
        if isinstance(selection, FragmentSpread):
            selection = doc.inline(selection)
        if isinstance(selection, Field):
            field_path = path + (selection.response_key,)
            dotted = '.'.join(field_path)
            field_def = resolve_field(schema, parent, selection.name, path=dotted)
            check_selection(schema, field_def, selection, dotted)
            if selection.name == TYPENAME:
                check, expected = _typename_check(schema, parent)
                oracles.append(FieldOracle(
                    selection.response_key, TYPENAME, parent, field_def.type_ref,
                    checks=(check,), expected_typename=expected, applies_to=applies_to,
                ))
                continue
            levels = _level_checks(schema, field_def.type_ref)
            children = ()
            if selection.selection_set is not None:
                named = field_def.type_ref.named_type
                children = _derive(schema, doc, selection.selection_set, named, named, None, field_path)
            oracles.append(FieldOracle(
                response_key=selection.response_key,
                field_name=selection.name,
                parent_type=parent,
                declared_type=field_def.type_ref,
                checks=(PRESENT,) + levels[0],
                item_checks=tuple(levels[1:]),
                children=children,
                applies_to=applies_to,
            ))
        else:
            condition = selection.type_condition or parent
            check_type_condition(schema, condition)
            narrowed = _narrow(schema, object_type, applies_to, condition)
            if narrowed == ():
                continue
            oracles.extend(_derive(
                schema, doc, selection.selection_set, object_type, condition, narrowed, path
            ))
    return _merge(oracles)


def derive_oracles(schema, doc):
    """Build the OracleTree for a QUERY document."""
    if doc.operation_kind is not OperationKind.QUERY:
        raise UnsupportedOperationError(
            f"Oracles are only derived for queries, not {doc.operation_kind.value.lower()}s"
        )
    root = schema.query_type_name
    return OracleTree(root=_derive(schema, doc, doc.selection_set, root, root, None, ()))
