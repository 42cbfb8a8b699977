"""Answer a list field with a scalar."""

from ..fixtures import FaultKind
from .base import BaseFault


class ListAsScalarFault(BaseFault):
    kind = FaultKind.LIST_AS_SCALAR
    name = "List as scalar"
    description = "Replaces a list value with a plain string."

    @classmethod
    def validate_field(cls, field_def, schema) -> tuple:
        if not field_def.type_ref.is_list:
            return False, f"{field_def.name} is not list-typed ({field_def.type_ref})"
        return True, ""

    def corrupt(self, resolution, obj, resolved):
        obj.value[resolved.response_key] = 'not-a-list'
