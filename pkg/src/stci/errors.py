"""Exception types shared across the package."""


class StciError(Exception):
    pass


class ContextError(StciError, ValueError):
    """Operands live in incompatible rings (variables, field or order)."""


class DomainError(StciError, ValueError):
    """Argument outside the operation's domain."""


class ParseError(StciError, ValueError):
    pass


class ValidationError(StciError, ValueError):
    """A barred matrix (or other structured input) violates its invariants."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CapExceeded(StciError, RuntimeError):
    """A configured resource cap was hit; the answer is unknown, not false."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})


class BudgetExceeded(StciError, RuntimeError):
    """Exhaustive enumeration or product expansion refused up front."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required
