class StructureError(Exception):
    """Base class for errors computing characteristic subgroups and invariants."""


class NotNormalError(StructureError):
    pass


class NotAbelianError(StructureError):
    pass
