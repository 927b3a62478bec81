"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An argument violates an operation's precondition."""


class ResourceLimit(RuntimeError):
    """A computation would exceed a configured size cap."""


class NotFactorable(ValueError):
    """Neville elimination failed; the matrix is not TNN or not supported."""


class ClosureAddedWarning(UserWarning):
    """Issued when a path-family relation needed transitive closure."""
