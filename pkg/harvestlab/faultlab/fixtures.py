"""Fixtures and the fault specs enabled on them."""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Tuple

from ..exceptions import FaultSpecError, InvalidSchemaError
from ..schema import load_schema
from ..schema.model import RefKind

logger = logging.getLogger(__name__)


class FaultKind(str, Enum):
    NULL_NONNULL_FIELD = 'NULL_NONNULL_FIELD'
    WRONG_SCALAR_TYPE = 'WRONG_SCALAR_TYPE'
    MISSING_FIELD = 'MISSING_FIELD'
    NON_MEMBER_ENUM = 'NON_MEMBER_ENUM'
    LIST_AS_SCALAR = 'LIST_AS_SCALAR'
    ERRORS_MEMBER = 'ERRORS_MEMBER'
    HTTP_5XX = 'HTTP_5XX'


@dataclass(frozen=True)
class FaultTarget:
    """Either an ``{object, field}`` location or a Query entry point."""

    object_name: Optional[str] = None
    field_name: Optional[str] = None
    entry_point: Optional[str] = None

    def to_dict(self):
        if self.entry_point is not None:
            return {'entry_point': self.entry_point}
        return {'object': self.object_name, 'field': self.field_name}

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise FaultSpecError("Fault target must be an object")
        if 'entry_point' in data:
            return cls(entry_point=data['entry_point'])
        if 'object' in data and 'field' in data:
            return cls(object_name=data['object'], field_name=data['field'])
        raise FaultSpecError("Fault target needs 'object' and 'field', or 'entry_point'")

    def __str__(self):
        if self.entry_point is not None:
            return self.entry_point
        return f"{self.object_name}.{self.field_name}"


@dataclass(frozen=True)
class FaultSpec:
    id: str
    kind: FaultKind
    target: FaultTarget
    # (name, accepted values) pairs; every pair must match for the fault to fire
    trigger: Tuple[Tuple[str, Tuple[Any, ...]], ...] = ()

    def to_dict(self):
        data = {'id': self.id, 'kind': self.kind.value, 'target': self.target.to_dict()}
        if self.trigger:
            data['trigger'] = {name: list(values) for name, values in self.trigger}
        return data

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise FaultSpecError("Fault spec must be a JSON object")
        for key in ('id', 'kind', 'target'):
            if key not in data:
                raise FaultSpecError(f"Fault spec is missing '{key}'")
        try:
            kind = FaultKind(data['kind'])
        except ValueError:
            raise FaultSpecError(f"Unknown fault kind: {data['kind']}") from None
        trigger = data.get('trigger') or {}
        if not isinstance(trigger, dict):
            raise FaultSpecError("Fault trigger must map names to accepted values")
        return cls(
            id=str(data['id']),
            kind=kind,
            target=FaultTarget.from_dict(data['target']),
            trigger=tuple(
                (name, tuple(values) if isinstance(values, list) else (values,))
                for name, values in sorted(trigger.items())
            ),
        )


def load_fault_spec(path):
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except json.JSONDecodeError as exc:
        raise FaultSpecError(f"{path} is not valid JSON: {exc}") from exc
    return FaultSpec.from_dict(data)


def _unservable_fields(schema):
    """``Type.field`` labels whose non-null value would have to be an abstract type nobody implements."""
    for type_def in schema.types.values():
        for field_def in type_def.fields:
            ref = field_def.type_ref
            while ref.kind is not RefKind.NAMED:
                if ref.kind is RefKind.NON_NULL and ref.of_type.kind is RefKind.NAMED:
                    if schema.get(ref.of_type.name).is_composite and not schema.possible_types(ref.of_type.name):
                        yield f"{type_def.name}.{field_def.name}"
                ref = ref.of_type


@dataclass(frozen=True)
class Fixture:
    schema: Any
    seed: int = 0
    faults: Tuple[FaultSpec, ...] = ()

    def __post_init__(self):
        from .faults import get_fault

        unservable = list(_unservable_fields(self.schema))
        if unservable:
            raise InvalidSchemaError(
                f"No object type implements the non-null abstract type of {', '.join(unservable)}"
            )
        seen = set()
        for spec in self.faults:
            if spec.id in seen:
                raise FaultSpecError(f"Fault id '{spec.id}' is used twice")
            seen.add(spec.id)
            is_valid, error_msg = get_fault(spec.kind).validate_spec(spec, self.schema)
            if not is_valid:
                raise FaultSpecError(f"Fault '{spec.id}': {error_msg}")

    @property
    def enabled_faults(self):
        return frozenset(spec.id for spec in self.faults)

    @classmethod
    def load(cls, schema_source, seed=0, fault_paths=()):
        faults = tuple(load_fault_spec(path) for path in fault_paths)
        for spec in faults:
            logger.info("Enabling fault %s (%s on %s)", spec.id, spec.kind.value, spec.target)
        return cls(load_schema(schema_source), seed, faults)
