"""
Exception hierarchy shared by the services and the command line.
"""


class SecOrderError(Exception):
    """Base class for every error raised on purpose by this package."""


class UsageError(SecOrderError, ValueError):
    """Malformed arguments: width, arity or ground-set mismatch, bad input files."""


class DomainError(SecOrderError, ValueError):
    """Arguments outside the mathematical domain, e.g. families with an empty component."""


class ResourceLimitError(SecOrderError):
    """An enumeration cap or sweep width was exceeded."""
