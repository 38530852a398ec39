"""Slope invariants of colored links.

The package computes the slope of a 2-colored link along two independent
routes (free differential calculus on a group presentation, and the
intersection-form linear algebra of a clasp surface system), together with
the supporting cast: admissible characters, defect functions, twisted
signatures and nullities, and the correction terms used when links are
spliced together.
"""

from .errors import InconclusiveError, LinkSlopeError, ParseError, PreconditionError

__version__ = "0.1.0"

__all__ = [
    "InconclusiveError",
    "LinkSlopeError",
    "ParseError",
    "PreconditionError",
    "__version__",
]
