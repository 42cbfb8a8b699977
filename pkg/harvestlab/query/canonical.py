"""Canonical request form and the dedup key derived from it."""

import json
from dataclasses import dataclass

from Crypto.Hash import SHA256

from .ast import EnumLiteral, Field, FragmentSpread, ObjectLiteral, Variable


@dataclass(frozen=True)
class CanonicalKey:
    """SHA-256 digest over the canonical query text and variables document."""

    digest: bytes

    def __post_init__(self):
        if len(self.digest) != 32:
            raise ValueError("A canonical key is a 32-byte digest")

    @classmethod
    def from_hex(cls, text):
        return cls(bytes.fromhex(text))

    @property
    def hex(self):
        return self.digest.hex()

    def short(self, length=12):
        return self.hex[:length]

    def __str__(self):
        return self.hex


def render_value(value):
    if value is None:
        return 'null'
    if value is True:
        return 'true'
    if value is False:
        return 'false'
    if isinstance(value, Variable):
        return f"${value.name}"
    if isinstance(value, EnumLiteral):
        return value.value
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, (int, float)):
        return repr(value)
    if isinstance(value, tuple):
        return '[' + ', '.join(render_value(item) for item in value) + ']'
    if isinstance(value, ObjectLiteral):
        return '{' + ', '.join(
            f"{name}: {render_value(inner)}" for name, inner in sorted(value.fields, key=lambda f: f[0])
        ) + '}'
    raise TypeError(f"Cannot render literal {value!r}")


def _render_arguments(arguments):
    if not arguments:
        return ''
    return '(' + ', '.join(
        f"{name}: {render_value(value)}" for name, value in sorted(arguments, key=lambda a: a[0])
    ) + ')'


def _render_directives(directives):
    return ''.join(f" @{d.name}{_render_arguments(d.arguments)}" for d in directives)


def _render_selection_set(selection_set, doc):
    parts = []
    for selection in selection_set:
        if isinstance(selection, FragmentSpread):
            selection = doc.inline(selection)
        if isinstance(selection, Field):
            text = f"{selection.alias}: {selection.name}" if selection.alias else selection.name
            text += _render_arguments(selection.arguments) + _render_directives(selection.directives)
            if selection.selection_set is not None:
                text += ' ' + _render_selection_set(selection.selection_set, doc)
        else:
            text = '...'
            if selection.type_condition:
                text += f" on {selection.type_condition}"
            text += _render_directives(selection.directives)
            text += ' ' + _render_selection_set(selection.selection_set, doc)
        parts.append(text)
    return '{ ' + ' '.join(parts) + ' }'


def canonical_text(doc):
    """Re-serialize ``doc`` with fragments inlined and arguments sorted.

    Field order is kept: two orderings of the same fields are two entries.
    """
    head = doc.operation_kind.value.lower()
    if doc.operation_name:
        head += f" {doc.operation_name}"
    if doc.variable_definitions:
        definitions = []
        for definition in doc.variable_definitions:
            text = f"${definition.name}: {definition.type_ref}"
            if definition.has_default:
                text += f" = {render_value(definition.default)}"
            definitions.append(text)
        head += '(' + ', '.join(definitions) + ')'
    head += _render_directives(doc.directives)
    return f"{head} {_render_selection_set(doc.selection_set, doc)}"


def canonical_variables(variables):
    """Serialize a variables document; absent and empty are the same form."""
    return json.dumps(variables or {}, sort_keys=True, separators=(',', ':'), ensure_ascii=False)


def canonicalize(doc, variables=None):
    digest = SHA256.new()
    digest.update(canonical_text(doc).encode('utf-8'))
    digest.update(b'\x00')
    digest.update(canonical_variables(variables).encode('utf-8'))
    return CanonicalKey(digest.digest())
