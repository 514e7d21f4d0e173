"""Exception hierarchy shared across the package.

Every error raised on a violated mathematical precondition derives from
:class:`PreconditionError`; callers that need to distinguish schema problems
from math problems (the CLI does) can catch the two branches separately.
"""

from __future__ import annotations


class QuiverlineError(Exception):
    """Base class for all package errors."""


class SchemaError(QuiverlineError):
    """Malformed input: wrong types, missing fields, unparsable literals."""


class InvalidInput(SchemaError):
    """Structurally valid data that violates a documented input contract."""


class DimError(SchemaError):
    """Shape mismatch in a matrix or vector operation."""


class PreconditionError(QuiverlineError):
    """A mathematical precondition of an operation does not hold."""


class InvalidPath(PreconditionError):
    """Arrow sequence is not composable or does not live in the quiver."""


class InvalidCycle(PreconditionError):
    """Arrow sequence is not a simple cycle."""


class ComposeError(PreconditionError):
    """Elements with mismatched endpoints cannot be multiplied."""


class NotTransverse(PreconditionError):
    """Two distinct simple cycles share more than one vertex."""


class NotReduced(PreconditionError):
    """Some simple cycle carries a non-reduced divisor label."""


class NonzeroCycleLabel(PreconditionError):
    """Contraction requires the cycle's total label to vanish."""


class NotLocalized(PreconditionError):
    """Labels are not all supported at the single expected point."""


class UnsupportedPresentation(PreconditionError):
    """Data is outside the normalized presentation this operation needs."""


class SizeLimit(PreconditionError):
    """Input exceeds the documented size guard for an exhaustive search."""


class InternalError(QuiverlineError):
    """A certified internal consistency check failed; this is a bug."""
