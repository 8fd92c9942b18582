"""Exception types raised across the package."""


class GainGraphError(ValueError):
    """Base class for every error raised by gainlap."""


class SelfLoopError(GainGraphError):
    pass


class DuplicateEdgeError(GainGraphError):
    pass


class NonUnitGainError(GainGraphError):
    pass


class BadIndexError(GainGraphError):
    pass


class MissingVertexValueError(GainGraphError):
    pass


class DifferentUnderlyingGraphError(GainGraphError):
    pass


class NotACycleError(GainGraphError):
    pass


class IsolatedVertexError(GainGraphError):
    pass


class DimensionMismatchError(GainGraphError):
    pass


class NonRealFormError(GainGraphError):
    pass


class NotHermitianError(GainGraphError):
    pass


class NoConvergenceError(GainGraphError):
    pass


class LengthMismatchError(GainGraphError):
    pass


class NonRealCoefficientError(GainGraphError):
    pass


class GraphTooLargeError(GainGraphError):
    pass


class EdgeNotPresentError(GainGraphError):
    pass


class NotSubgraphError(GainGraphError):
    pass


class BadConfigError(GainGraphError):
    pass


class GraphFileError(GainGraphError):
    """Problem in a graph file; ``line`` is 1-based, or None for file-level errors."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class GraphFileSyntaxError(GraphFileError):
    pass


class BadHeaderError(GraphFileError):
    pass
