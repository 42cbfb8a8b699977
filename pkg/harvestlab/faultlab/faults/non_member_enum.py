"""Answer an enum field with a value outside the enum."""

from ...schema.model import TypeKind
from ..fixtures import FaultKind
from .base import BaseFault, map_leaves

NON_MEMBER = '__NOT_A_MEMBER__'


class NonMemberEnumFault(BaseFault):
    kind = FaultKind.NON_MEMBER_ENUM
    name = "Non-member enum value"
    description = "Replaces an enum value with a string the enum does not declare."

    @classmethod
    def validate_field(cls, field_def, schema) -> tuple:
        type_def = schema.get(field_def.type_ref.named_type)
        if type_def is None or type_def.kind is not TypeKind.ENUM:
            return False, f"{field_def.name} is not enum-typed"
        return True, ""

    def corrupt(self, resolution, obj, resolved):
        obj.value[resolved.response_key] = map_leaves(
            obj.value.get(resolved.response_key), lambda _value: NON_MEMBER
        )
