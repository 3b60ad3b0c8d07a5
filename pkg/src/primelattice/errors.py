class DomainError(ValueError):
    """Raised when an input falls outside an operation's documented domain."""
