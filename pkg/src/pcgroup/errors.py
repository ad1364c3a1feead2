"""
Exceptions raised while turning presentations into groups.
"""


class PresentationError(Exception):
    """Base class for presentation and construction errors."""


class ExpressionError(PresentationError):
    pass


class UnboundName(ExpressionError):
    def __init__(self, name):
        super().__init__(f"unbound name '{name}'")
        self.name = name


class ConstraintViolation(PresentationError):
    """A parameter assignment fails one of the template's constraints."""

    def __init__(self, constraint, params=None):
        super().__init__(f"constraint '{constraint}' fails for {params}")
        self.constraint = constraint
        self.params = params


class UnresolvedWord(PresentationError):
    pass


class InconsistentPresentation(PresentationError):
    """Carries the first failure found by the consistency check."""

    def __init__(self, failure):
        super().__init__(str(failure))
        self.failure = failure


class OrderGuardExceeded(PresentationError):
    def __init__(self, order, limit):
        super().__init__(f"group order {order} exceeds the guard {limit}")
        self.order = order
        self.limit = limit


class ProductError(PresentationError):
    pass


class NotMetabelian(PresentationError):
    pass
