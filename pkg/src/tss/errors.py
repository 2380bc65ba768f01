"""Exception hierarchy shared by every stage of the pipeline."""


class TssError(Exception):
    """Base class for all errors raised by this package."""


class DimensionLimitError(TssError):
    """A matrix would exceed the configured maximum dimension."""

    def __init__(self, dim, max_dim):
        super().__init__(f"matrix dimension {dim} exceeds limit {max_dim}")
        self.dim = dim
        self.max_dim = max_dim


class MatrixParseError(TssError):
    """A matrix file could not be parsed.

    ``row`` and ``column`` are 1-based and point at the offending entry when
    known.
    """

    def __init__(self, message, path=None, row=None, column=None):
        where = []
        if path is not None:
            where.append(str(path))
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.path = path
        self.row = row
        self.column = column


class ShapeError(MatrixParseError):
    """Rows of unequal length, or a non-square matrix."""


class CatalogError(TssError):
    """Unknown gate name."""


class ArityError(TssError):
    """Wrong number (or kind) of gate parameters."""


class ParseError(TssError):
    """Syntax error in a gate expression.

    ``offset`` is the 0-based character position of the failure; it may equal
    ``len(text)`` when the input ended early.
    """

    def __init__(self, message, offset, expected=None, text=None):
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
        self.message = message
        self.offset = offset
        self.expected = expected
        self.text = text


class EvaluationError(TssError):
    """Evaluation of a gate expression failed at a specific AST node.

    ``path`` names the route from the root to the failing node, e.g.
    ``("left", "right")``; ``cause`` is the underlying error.
    """

    def __init__(self, cause, path=()):
        where = "/".join(path) if path else "<root>"
        super().__init__(f"{cause} [at {where}]")
        self.cause = cause
        self.path = tuple(path)


class FormatError(TssError):
    """Export format not valid for the object being exported."""
