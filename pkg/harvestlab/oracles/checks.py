"""Check kinds and how each one judges an observed value."""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..schema.model import TypeKind

INT32_MIN = -(2 ** 31)
INT32_MAX = 2 ** 31 - 1


class Missing:
    """Marker for a key absent from a response object."""

    def __repr__(self):
        return '<missing>'


MISSING = Missing()


class CheckKind(str, Enum):
    # format oracles
    STATUS_IS_200 = 'STATUS_IS_200'
    BODY_IS_JSON_OBJECT = 'BODY_IS_JSON_OBJECT'
    NO_ERRORS_MEMBER = 'NO_ERRORS_MEMBER'
    # schema oracles
    PRESENT = 'PRESENT'
    NOT_NULL = 'NOT_NULL'
    IS_LIST = 'IS_LIST'
    IS_MAP = 'IS_MAP'
    IS_STRING = 'IS_STRING'
    IS_BOOL = 'IS_BOOL'
    IS_INT = 'IS_INT'
    IS_NUMERIC = 'IS_NUMERIC'
    ENUM_MEMBER = 'ENUM_MEMBER'
    TYPENAME_EQUALS = 'TYPENAME_EQUALS'
    TYPENAME_IN = 'TYPENAME_IN'
    # the request never produced a response
    TRANSPORT = 'TRANSPORT'


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_int(value):
    if not _is_number(value):
        return False
    if isinstance(value, float) and not value.is_integer():
        return False
    return INT32_MIN <= value <= INT32_MAX


_EVALUATORS = {
    CheckKind.NOT_NULL: lambda value, _values: value is not None,
    CheckKind.IS_LIST: lambda value, _values: isinstance(value, list),
    CheckKind.IS_MAP: lambda value, _values: isinstance(value, dict),
    CheckKind.IS_STRING: lambda value, _values: isinstance(value, str),
    CheckKind.IS_BOOL: lambda value, _values: isinstance(value, bool),
    CheckKind.IS_INT: lambda value, _values: _is_int(value),
    CheckKind.IS_NUMERIC: lambda value, _values: _is_number(value),
    CheckKind.ENUM_MEMBER: lambda value, values: isinstance(value, str) and value in values,
    CheckKind.TYPENAME_EQUALS: lambda value, values: isinstance(value, str) and value in values,
    CheckKind.TYPENAME_IN: lambda value, values: isinstance(value, str) and value in values,
}


@dataclass(frozen=True)
class Check:
    kind: CheckKind
    # enum members or expected type names
    values: Tuple[str, ...] = ()

    def evaluate(self, value):
        """Judge a single value; only value-level kinds are evaluable here."""
        if value is MISSING:
            return False
        return _EVALUATORS[self.kind](value, self.values)

    def to_dict(self):
        data = {'kind': self.kind.value}
        if self.values:
            data['values'] = list(self.values)
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(CheckKind(data['kind']), tuple(data.get('values', ())))

    def __str__(self):
        if self.values:
            return f"{self.kind.value}({', '.join(self.values)})"
        return self.kind.value


FORMAT_CHECKS = (
    Check(CheckKind.STATUS_IS_200),
    Check(CheckKind.BODY_IS_JSON_OBJECT),
    Check(CheckKind.NO_ERRORS_MEMBER),
)

PRESENT = Check(CheckKind.PRESENT)
NOT_NULL = Check(CheckKind.NOT_NULL)
IS_LIST = Check(CheckKind.IS_LIST)
IS_MAP = Check(CheckKind.IS_MAP)

_SCALAR_CHECKS = {
    'String': Check(CheckKind.IS_STRING),
    'ID': Check(CheckKind.IS_STRING),
    'Int': Check(CheckKind.IS_INT),
    'Float': Check(CheckKind.IS_NUMERIC),
    'Boolean': Check(CheckKind.IS_BOOL),
}


def leaf_check(schema, type_name):
    """Type check for a leaf, or None for custom scalars (nullability only)."""
    if type_name in _SCALAR_CHECKS:
        return _SCALAR_CHECKS[type_name]
    type_def = schema.get(type_name)
    if type_def is not None and type_def.kind is TypeKind.ENUM:
        return Check(CheckKind.ENUM_MEMBER, type_def.enum_values)
    return None
