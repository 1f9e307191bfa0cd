"""Exception hierarchy shared by the library and the CLI exit codes."""


class CompClustError(Exception):
    """Base class for all library errors."""


class DomainError(CompClustError, ValueError):
    """Input outside the mathematical domain of an operation."""


class DimensionError(DomainError):
    """Vector length does not match the quiver."""


class NotFoundError(DomainError, LookupError):
    """Requested object (root, tube member, ...) does not exist."""


class GuardError(CompClustError):
    """A hard size guard was exceeded."""


class InternalError(CompClustError, AssertionError):
    """A certificate or postcondition failed; indicates a bug."""


class GenericityError(CompClustError):
    """Sampled data was not generic, or seeds disagreed."""
