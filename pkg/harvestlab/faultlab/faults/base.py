"""Base class for all injectable faults."""

import logging
from abc import ABC, abstractmethod

from ...schema.model import TypeKind

logger = logging.getLogger(__name__)


def _same(value, accepted):
    # keeps False and 0 apart
    return type(value) is type(accepted) and value == accepted


def map_leaves(value, corrupt):
    """Apply ``corrupt`` to a leaf value or to every leaf of a (nested) list."""
    if isinstance(value, list):
        return [map_leaves(item, corrupt) for item in value]
    return corrupt(value)


class BaseFault(ABC):
    """Abstract base class for fault implementations.

    A fault rewrites an already resolved response at every location its
    target names and its trigger accepts.
    """

    kind = None
    name = "Base Fault"
    description = "Base fault class"
    target_kind = "field"

    def __init__(self, spec):
        self.spec = spec

    @abstractmethod
    def corrupt(self, resolution, obj, resolved):
        """Rewrite one targeted location."""

    @classmethod
    def validate_spec(cls, spec, schema) -> tuple:
        """Validate the spec against a schema. Returns (is_valid, error_message)."""
        target = spec.target
        if cls.target_kind == "entry_point":
            if target.entry_point is None:
                return False, f"{spec.kind.value} targets an entry point"
            if schema.query_type.field(target.entry_point) is None:
                return False, f"Query has no entry point '{target.entry_point}'"
            return True, ""
        if target.entry_point is not None:
            return False, f"{spec.kind.value} targets an object field"
        type_def = schema.get(target.object_name)
        if type_def is None or type_def.kind not in (TypeKind.OBJECT, TypeKind.INTERFACE):
            return False, f"'{target.object_name}' is not an object or interface type"
        field_def = type_def.field(target.field_name)
        if field_def is None:
            return False, f"{target.object_name} has no field '{target.field_name}'"
        return cls.validate_field(field_def, schema)

    @classmethod
    def validate_field(cls, field_def, schema) -> tuple:
        return True, ""

    def targets(self, resolution):
        target = self.spec.target
        types = resolution.schema.possible_types(target.object_name)
        for obj in resolution.objects:
            if obj.type_name not in types:
                continue
            for resolved in obj.fields:
                if resolved.name == target.field_name:
                    yield obj, resolved

    def triggered(self, resolution, obj, resolved):
        for name, accepted in self.spec.trigger:
            if name in resolved.arguments:
                value = resolved.arguments[name]
            else:
                value = resolution.generator.sibling(obj.type_name, obj.path, name)
            if not any(_same(value, candidate) for candidate in accepted):
                return False
        return True

    def apply(self, resolution):
        hits = 0
        for obj, resolved in list(self.targets(resolution)):
            if self.triggered(resolution, obj, resolved):
                self.corrupt(resolution, obj, resolved)
                hits += 1
        if hits:
            logger.debug("Fault %s rewrote %d location(s)", self.spec.id, hits)
        return hits


class EntryPointFault(BaseFault):
    """A fault that corrupts the whole response when an entry point is selected."""

    target_kind = "entry_point"

    def targets(self, resolution):
        root = resolution.objects[0]
        for resolved in root.fields:
            if resolved.name == self.spec.target.entry_point:
                yield root, resolved
