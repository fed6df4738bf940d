"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class LcdMdsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LcdMdsError, ValueError):
    """A mathematical precondition fails (zero inverse, p | n, gcd != 1, ...)."""


class UsageError(LcdMdsError, ValueError):
    """Malformed input: wrong lengths, mixed fields, bad parity requests."""


class ResourceError(LcdMdsError, RuntimeError):
    """A search or enumeration would exceed its configured budget."""


class InternalError(LcdMdsError, RuntimeError):
    """Two independent checks disagree; indicates an arithmetic bug."""
