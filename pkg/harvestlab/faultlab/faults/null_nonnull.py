"""Null a field the schema declares non-nullable."""

from ..fixtures import FaultKind
from .base import BaseFault


class NullNonNullFault(BaseFault):
    """
    Resolves a non-null field to null, like a resolver that only fills the
    field on some branch.
    """

    kind = FaultKind.NULL_NONNULL_FIELD
    name = "Null non-null field"
    description = "Sets a field declared with '!' to null."

    @classmethod
    def validate_field(cls, field_def, schema) -> tuple:
        if not field_def.type_ref.is_non_null:
            return False, f"{field_def.name} is nullable ({field_def.type_ref})"
        return True, ""

    def corrupt(self, resolution, obj, resolved):
        obj.value[resolved.response_key] = None
