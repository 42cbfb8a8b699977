"""Attach an errors member to an otherwise complete response."""

from ..fixtures import FaultKind
from .base import EntryPointFault


class ErrorsMemberFault(EntryPointFault):
    """
    Keeps the data but reports an error for the entry point, like a resolver
    that raised after part of the response was built.
    """

    kind = FaultKind.ERRORS_MEMBER
    name = "Errors member"
    description = "Adds a GraphQL errors array when the entry point is queried."

    def corrupt(self, resolution, obj, resolved):
        resolution.errors.append({
            'message': f"Internal error while resolving '{resolved.name}'",
            'path': [resolved.response_key],
        })
