"""Error types shared across the library."""


class DomainError(ValueError):
    """A mathematical precondition was violated by the caller."""


class IntegrityError(RuntimeError):
    """An internal consistency check failed; this indicates a bug, not bad input."""
