"""
Faultlab faults package.
Each module implements one kind of schema fault that can be injected into
faultlab responses.
"""

from ..fixtures import FaultKind
from .errors_member import ErrorsMemberFault
from .http_5xx import Http5xxFault
from .list_as_scalar import ListAsScalarFault
from .missing_field import MissingFieldFault
from .non_member_enum import NonMemberEnumFault
from .null_nonnull import NullNonNullFault
from .wrong_scalar import WrongScalarTypeFault

FAULT_REGISTRY = {
    FaultKind.NULL_NONNULL_FIELD: NullNonNullFault,
    FaultKind.WRONG_SCALAR_TYPE: WrongScalarTypeFault,
    FaultKind.MISSING_FIELD: MissingFieldFault,
    FaultKind.NON_MEMBER_ENUM: NonMemberEnumFault,
    FaultKind.LIST_AS_SCALAR: ListAsScalarFault,
    FaultKind.ERRORS_MEMBER: ErrorsMemberFault,
    FaultKind.HTTP_5XX: Http5xxFault,
}


def get_fault(kind):
    """Get a fault class by kind."""
    try:
        return FAULT_REGISTRY[FaultKind(kind)]
    except ValueError:
        return None


def get_all_faults():
    """Get information about all available fault kinds."""
    return {
        kind.value: {
            'name': fault.name,
            'description': fault.description,
            'target': fault.target_kind,
        }
        for kind, fault in FAULT_REGISTRY.items()
    }
