"""Exceptions shared across the package."""


class DomainError(ValueError):
    """Invalid mathematical input: malformed partition, beta not below alpha, etc."""


class InvariantError(RuntimeError):
    """An internal invariant failed: non-integral Bott sum, engine disagreement, etc."""
