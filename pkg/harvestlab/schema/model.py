"""Immutable GraphQL type-system model and the schema tuple universe."""

from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

from ..exceptions import UnknownFieldError

BUILTIN_SCALARS = frozenset({'Int', 'Float', 'String', 'Boolean', 'ID'})
TYPENAME = '__typename'


class TypeKind(str, Enum):
    OBJECT = 'OBJECT'
    INTERFACE = 'INTERFACE'
    UNION = 'UNION'
    ENUM = 'ENUM'
    SCALAR = 'SCALAR'
    INPUT_OBJECT = 'INPUT_OBJECT'


class RefKind(str, Enum):
    NAMED = 'NAMED'
    LIST = 'LIST'
    NON_NULL = 'NON_NULL'


@dataclass(frozen=True)
class TypeRef:
    """A possibly wrapped reference to a named type, e.g. ``[String!]!``."""

    kind: RefKind
    name: Optional[str] = None
    of_type: Optional['TypeRef'] = None

    def __post_init__(self):
        if self.kind is RefKind.NAMED:
            if not self.name or self.of_type is not None:
                raise ValueError("NAMED type references carry a name and nothing else")
        else:
            if self.of_type is None:
                raise ValueError(f"{self.kind.value} type references must wrap a type")
            if self.kind is RefKind.NON_NULL and self.of_type.kind is RefKind.NON_NULL:
                raise ValueError("NON_NULL cannot wrap NON_NULL")

    @classmethod
    def named(cls, name):
        return cls(RefKind.NAMED, name=name)

    @classmethod
    def list_of(cls, of_type):
        return cls(RefKind.LIST, of_type=of_type)

    @classmethod
    def non_null(cls, of_type):
        return cls(RefKind.NON_NULL, of_type=of_type)

    @classmethod
    def parse(cls, text):
        """Parse the SDL notation produced by ``str()``."""
        text = text.strip()
        if text.endswith('!'):
            return cls.non_null(cls.parse(text[:-1]))
        if text.startswith('[') and text.endswith(']'):
            return cls.list_of(cls.parse(text[1:-1]))
        if not text or not text.replace('_', 'a').isalnum():
            raise ValueError(f"Not a type reference: {text!r}")
        return cls.named(text)

    @property
    def is_non_null(self):
        return self.kind is RefKind.NON_NULL

    @property
    def is_list(self):
        """True when the nullable part of this reference is a list."""
        return self.nullable().kind is RefKind.LIST

    @property
    def named_type(self):
        ref = self
        while ref.kind is not RefKind.NAMED:
            ref = ref.of_type
        return ref.name

    def nullable(self):
        return self.of_type if self.is_non_null else self

    def __str__(self):
        if self.kind is RefKind.NAMED:
            return self.name
        if self.kind is RefKind.LIST:
            return f"[{self.of_type}]"
        return f"{self.of_type}!"


@dataclass(frozen=True)
class ArgumentDef:
    name: str
    type_ref: TypeRef
    required: bool
    # GraphQL literal as printed in SDL, e.g. ``10`` or ``"x"``
    default: Optional[str] = None


@dataclass(frozen=True)
class FieldDef:
    name: str
    type_ref: TypeRef
    arguments: Tuple[ArgumentDef, ...] = ()
    # input-object fields only
    default: Optional[str] = None

    def argument(self, name):
        for arg in self.arguments:
            if arg.name == name:
                return arg
        return None


TYPENAME_FIELD = FieldDef(TYPENAME, TypeRef.non_null(TypeRef.named('String')))


@dataclass(frozen=True)
class TypeDef:
    name: str
    kind: TypeKind
    fields: Tuple[FieldDef, ...] = ()
    enum_values: Tuple[str, ...] = ()
    union_members: Tuple[str, ...] = ()
    implemented_interfaces: Tuple[str, ...] = ()

    @property
    def is_composite(self):
        return self.kind in (TypeKind.OBJECT, TypeKind.INTERFACE, TypeKind.UNION)

    @property
    def has_fields(self):
        return self.kind in (TypeKind.OBJECT, TypeKind.INTERFACE)

    def field(self, name):
        for field_def in self.fields:
            if field_def.name == name:
                return field_def
        return None

    def canonical(self):
        return replace(
            self,
            fields=tuple(sorted(self.fields, key=lambda f: f.name)),
            union_members=tuple(sorted(self.union_members)),
            implemented_interfaces=tuple(sorted(self.implemented_interfaces)),
        )


@dataclass(frozen=True)
class SchemaTuple:
    """One ``{object, field}`` unit of schema coverage."""

    object_name: str
    field_name: str

    def to_dict(self):
        return {'object': self.object_name, 'field': self.field_name}

    @classmethod
    def from_dict(cls, data):
        return cls(data['object'], data['field'])

    def __str__(self):
        return f"{{{self.object_name}, {self.field_name}}}"


@dataclass(frozen=True)
class SchemaModel:
    """A parsed GraphQL type system.

    ``types`` holds every declared type except the built-in scalars and the
    introspection types. The model is read-only once built.
    """

    types: Mapping[str, TypeDef]
    query_type_name: str = 'Query'
    mutation_type_name: Optional[str] = None
    subscription_type_name: Optional[str] = None
    _possible: Mapping[str, frozenset] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'types', MappingProxyType(dict(self.types)))
        object.__setattr__(self, '_possible', MappingProxyType(self._compute_possible_types()))

    def _compute_possible_types(self):
        possible = {}
        for type_def in self.types.values():
            if type_def.kind is TypeKind.OBJECT:
                possible[type_def.name] = {type_def.name}
        for type_def in self.types.values():
            if type_def.kind is TypeKind.UNION:
                possible[type_def.name] = set(type_def.union_members)
            elif type_def.kind is TypeKind.INTERFACE:
                possible.setdefault(type_def.name, set())
        for type_def in self.types.values():
            if type_def.kind is TypeKind.OBJECT:
                for interface in type_def.implemented_interfaces:
                    possible.setdefault(interface, set()).add(type_def.name)
        return {name: frozenset(names) for name, names in possible.items()}

    @property
    def query_type(self):
        return self.types[self.query_type_name]

    def get(self, name):
        return self.types.get(name)

    def is_leaf(self, name):
        if name in BUILTIN_SCALARS:
            return True
        type_def = self.types.get(name)
        return type_def is not None and type_def.kind in (TypeKind.SCALAR, TypeKind.ENUM)

    def possible_types(self, name):
        """Concrete object types a value of type ``name`` may have at runtime."""
        return self._possible.get(name, frozenset())

    def root_type_names(self):
        return tuple(
            name for name in (self.query_type_name, self.mutation_type_name, self.subscription_type_name)
            if name
        )

    def canonical(self):
        """Order-insensitive form used for equality checks."""
        return SchemaModel(
            types={name: self.types[name].canonical() for name in sorted(self.types)},
            query_type_name=self.query_type_name,
            mutation_type_name=self.mutation_type_name,
            subscription_type_name=self.subscription_type_name,
        )


def tuple_universe(schema):
    """Return every ``{object, field}`` tuple of ``schema``.

    OBJECT and INTERFACE types contribute one tuple per declared field, root
    Query and Mutation types included. Subscription roots, unions, enums,
    scalars and input objects contribute nothing; ``__typename`` never does.
    """
    universe = set()
    for type_def in schema.types.values():
        if not type_def.has_fields or type_def.name == schema.subscription_type_name:
            continue
        for field_def in type_def.fields:
            universe.add(SchemaTuple(type_def.name, field_def.name))
    return frozenset(universe)


def resolve_field(schema, parent_type, field_name, path=None):
    """Look up ``field_name`` on an OBJECT or INTERFACE type."""
    type_def = schema.types.get(parent_type)
    if type_def is None or not type_def.is_composite:
        raise UnknownFieldError(parent_type, field_name, path)
    if field_name == TYPENAME:
        return TYPENAME_FIELD
    field_def = type_def.field(field_name)
    if field_def is None:
        raise UnknownFieldError(parent_type, field_name, path)
    return field_def
