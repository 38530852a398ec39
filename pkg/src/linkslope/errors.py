"""Exception hierarchy shared across the package.

Errors are split by who is at fault: ``ParseError`` for malformed input
text, ``PreconditionError`` for structurally valid input that violates a
documented domain restriction, and ``InconclusiveError`` for computations
that terminate without an answer (the caller is told which other route to
try). CLI exit codes are derived from this hierarchy.
"""

from __future__ import annotations

__all__ = [
    "LinkSlopeError",
    "ParseError",
    "PreconditionError",
    "InconclusiveError",
]


class LinkSlopeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LinkSlopeError):
    """Malformed textual input (polynomial, PD code, character, JSON)."""


class PreconditionError(LinkSlopeError):
    """Input violates a documented precondition (bad character, wrong mu, ...)."""


class InconclusiveError(LinkSlopeError):
    """The chosen method cannot decide; the message names an alternative."""
