"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class PathDecompError(Exception):
    """Base class for all errors raised by pathdecomp."""


# graph construction and parsing

class GraphError(PathDecompError, ValueError):
    pass


class EndpointOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class EmptyFactor(GraphError):
    pass


class EdgeNotPresent(GraphError):
    pass


class InvalidParams(GraphError):
    pass


class GenerationFailed(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# decomposition model

class HostMismatch(PathDecompError, ValueError):
    pass


class TrivialPath(PathDecompError, ValueError):
    pass


# preconditions of the constructive decomposers

class PreconditionError(PathDecompError, ValueError):
    """An input graph does not satisfy a decomposer's hypothesis."""


class NotConnected(PreconditionError):
    pass


class EdgelessGraph(PreconditionError):
    pass


class NotOddGraph(PreconditionError):
    pass


class NotEvenGraph(PreconditionError):
    pass


class NotATree(PreconditionError):
    pass


class BadOrder(PreconditionError):
    pass


class TooSmall(PreconditionError):
    pass


class NotTightDecomposition(PreconditionError):
    pass


class OddVertexNotAnEnd(PreconditionError):
    pass


class CorrespondenceMismatch(PreconditionError):
    pass


# internal consistency

class InvariantViolation(PathDecompError, AssertionError):
    """A proof-level invariant failed at runtime; indicates a bug or bad input."""


class BudgetExhausted(PathDecompError):
    def __init__(self, message: str, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent
