"""Exception hierarchy shared by every module of the package."""


class QTreeError(Exception):
    """Base class for all errors raised by qtree."""


class ParseError(QTreeError, ValueError):
    """Text input (polynomial, path, field) could not be parsed."""


class PreconditionError(QTreeError, ValueError):
    """An operation was called outside its domain."""


class FieldMismatch(PreconditionError):
    """Operands live over different base fields."""


class UnsupportedField(PreconditionError):
    """The requested operation is not available over this field (e.g. factoring over Q)."""


class BudgetExceeded(QTreeError, RuntimeError):
    """A configured degree cap, retry budget or search bound was exhausted."""


class InternalError(QTreeError, AssertionError):
    """A state that the mathematics rules out was reached."""
