"""Exception types shared across the package."""


class QhcatError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(QhcatError):
    """Matrix or map shapes are incompatible."""


class WindowTooSmall(QhcatError):
    """The finite window cannot support the requested construction.

    Raised when a computation would need vertices outside the window
    (missing layers, truncated supports, relation closure escaping the
    window) instead of silently truncating.
    """


class PreconditionError(QhcatError):
    """A stated precondition of an operation does not hold."""


class SpecFileError(QhcatError):
    """A problem with a CLI spec file (schema violation, unknown keys)."""
