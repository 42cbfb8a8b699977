"""Exceptions raised across harvestlab."""


class HarvestLabError(Exception):
    """Base class for every error raised by harvestlab."""


class DocumentSyntaxError(HarvestLabError, ValueError):
    """Malformed SDL or request document, annotated with its position."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class UnresolvedTypeError(HarvestLabError, ValueError):
    """A type reference names a type the schema never declares."""

    def __init__(self, type_name, referenced_by=None):
        self.type_name = type_name
        self.referenced_by = referenced_by
        where = f" (referenced by {referenced_by})" if referenced_by else ""
        super().__init__(f"Unknown type '{type_name}'{where}")


class DuplicateTypeError(HarvestLabError, ValueError):
    def __init__(self, type_name):
        self.type_name = type_name
        super().__init__(f"Type '{type_name}' is declared more than once")


class InvalidSchemaError(HarvestLabError, ValueError):
    pass


class FormatError(HarvestLabError, ValueError):
    """A structured document does not have the expected envelope."""


class UnknownFieldError(HarvestLabError, LookupError):
    def __init__(self, parent_type, field_name, path=None):
        self.parent_type = parent_type
        self.field_name = field_name
        self.path = path
        where = f" at '{path}'" if path else ""
        super().__init__(f"Type '{parent_type}' has no field '{field_name}'{where}")


class UndefinedFragmentError(HarvestLabError, ValueError):
    def __init__(self, fragment_name):
        self.fragment_name = fragment_name
        super().__init__(f"Fragment '{fragment_name}' is not defined")


class FragmentCycleError(HarvestLabError, ValueError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"Fragment cycle: {' -> '.join(self.cycle)}")


class UndeclaredVariableError(HarvestLabError, ValueError):
    def __init__(self, variable_name):
        self.variable_name = variable_name
        super().__init__(f"Variable '${variable_name}' is used but not declared")


class OperationSelectionError(HarvestLabError, ValueError):
    """The document's operations cannot be narrowed down to exactly one."""


class InvalidSelectionError(HarvestLabError, ValueError):
    """A selection set does not fit the type of the field it hangs off."""


class UnsupportedOperationError(HarvestLabError, ValueError):
    pass


class StorageError(HarvestLabError):
    """The query store could not persist an event."""


class FaultSpecError(HarvestLabError, ValueError):
    pass
