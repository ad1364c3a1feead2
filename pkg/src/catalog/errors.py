"""
Exceptions raised while loading and instantiating the catalog.
"""


class CatalogError(Exception):
    """Base class for catalog problems."""


class SchemaError(CatalogError):
    def __init__(self, entry_id, field, message):
        super().__init__(f"{entry_id}: field '{field}': {message}")
        self.entry_id = entry_id
        self.field = field


class ManifestMismatch(CatalogError):
    pass


class InadmissibleAssignment(CatalogError):
    """The assignment fails one of the entry's constraints."""

    def __init__(self, entry_id, constraint, assignment=None):
        super().__init__(f"{entry_id}: constraint '{constraint}' fails for {assignment}")
        self.entry_id = entry_id
        self.constraint = constraint
        self.assignment = assignment


class UnboundParameter(CatalogError):
    def __init__(self, entry_id, name, field=""):
        super().__init__(f"{entry_id}: '{name}' is unbound in {field or 'an expression'}")
        self.entry_id = entry_id
        self.name = name
        self.field = field
