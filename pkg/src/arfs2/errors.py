"""Exception hierarchy.

Bound-related failures are kept apart from mathematical answers: a search that
ran out of room raises, it never returns ``False``.
"""


class ArfS2Error(Exception):
    """Base class for all errors raised by this package."""


class DegenerateCone(ArfS2Error, ValueError):
    """The generators span a cone that is not pointed and full-dimensional."""


class BoundExceeded(ArfS2Error):
    """A certified search needed a larger box than the configured maximum."""


class IterationLimit(ArfS2Error):
    """A fixpoint iteration did not settle within the allowed number of rounds."""


class NotFound(ArfS2Error):
    """No element with the requested property exists among the candidates."""


class DegreeCapExceeded(ArfS2Error):
    """A Groebner basis computation produced an S-pair above the degree cap."""


class InconsistencyError(ArfS2Error, AssertionError):
    """Two routes that must agree by a theorem disagreed: an implementation bug."""
