"""Exception types shared across the package."""


class HopfGraphsError(Exception):
    """Base class for all package errors."""


class VertexBudgetExceeded(HopfGraphsError):
    """Canonical relabeling or automorphism search beyond the size cap."""


class ModeMismatch(HopfGraphsError):
    """Ordered and unordered elements combined in one operation."""


class NotAdmissible(HopfGraphsError):
    """Monomial has an edge or external variable at an absent vertex."""


class DroppedTermError(HopfGraphsError):
    """A product term exceeded the truncation degree of its algebra."""


class QFactorizationMismatch(HopfGraphsError):
    """Squaring morphism requested with target parameters q1*q2 != q."""


class InconclusiveOracle(HopfGraphsError):
    """Alphabet too small for the requested realization check."""


class UnsupportedOperation(HopfGraphsError):
    """Operation not defined on the requested family."""
