"""Exception types shared across the package."""


class QmetroError(Exception):
    """Base class for all qmetro errors."""


class DomainError(QmetroError, ValueError):
    """A parameter lies outside its documented domain."""


class DimensionError(QmetroError, ValueError):
    """Matrix or subsystem dimensions are inconsistent."""


class NumericError(QmetroError, ValueError):
    """Input contains non-finite entries or violates a numeric precondition."""


class ResourceError(QmetroError, RuntimeError):
    """A computation would exceed the configured size cap."""


class ConstraintError(QmetroError, RuntimeError):
    """A requested constraint (e.g. vanishing cross term) is infeasible."""
