"""Drop a requested key from the response."""

from ..fixtures import FaultKind
from .base import BaseFault


class MissingFieldFault(BaseFault):
    kind = FaultKind.MISSING_FIELD
    name = "Missing field"
    description = "Omits a requested field from its parent object."

    def corrupt(self, resolution, obj, resolved):
        obj.value.pop(resolved.response_key, None)
