"""Serialize a leaf with the wrong JSON type."""

from ...schema.model import BUILTIN_SCALARS, TypeKind
from ..fixtures import FaultKind
from .base import BaseFault, map_leaves

WRONG_VALUES = {
    'String': 42,
    'ID': 42,
    'Int': 'not-a-number',
    'Float': 'not-a-number',
    'Boolean': 'true',
}


class WrongScalarTypeFault(BaseFault):
    kind = FaultKind.WRONG_SCALAR_TYPE
    name = "Wrong scalar type"
    description = "Replaces a scalar or enum value with a value of another JSON type."

    @classmethod
    def validate_field(cls, field_def, schema) -> tuple:
        named = field_def.type_ref.named_type
        type_def = schema.get(named)
        if named in BUILTIN_SCALARS or (type_def is not None and type_def.kind is TypeKind.ENUM):
            return True, ""
        return False, f"{field_def.name} is not a built-in scalar or enum ({named})"

    def corrupt(self, resolution, obj, resolved):
        wrong = WRONG_VALUES.get(resolved.field_def.type_ref.named_type, 42)
        obj.value[resolved.response_key] = map_leaves(
            obj.value.get(resolved.response_key), lambda _value: wrong
        )
