"""Fail the whole request with a server error."""

from ..fixtures import FaultKind
from .base import EntryPointFault


class Http5xxFault(EntryPointFault):
    kind = FaultKind.HTTP_5XX
    name = "HTTP 5xx"
    description = "Answers with status 500 when the entry point is queried."

    def corrupt(self, resolution, obj, resolved):
        resolution.status = 500
        resolution.data = None
        resolution.errors = [{'message': 'Internal server error'}]
