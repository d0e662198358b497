#!/usr/bin/env python3
"""
Exception hierarchy for Quorum Coloring

Every error raised on bad input or a broken invariant derives from QuorumError,
so callers (and the CLI) can catch one type.
"""

from typing import Any, Optional


class QuorumError(ValueError):
    """Base class for all domain errors"""


# Tree construction

class TreeStructureError(QuorumError):
    """Parent links do not describe a rooted tree"""


class MultipleRootsError(TreeStructureError):
    pass


class NoRootError(TreeStructureError):
    pass


class CycleDetectedError(TreeStructureError):
    pass


class IndexOutOfRangeError(TreeStructureError):
    pass


# Colorings and validation

class SizeMismatchError(QuorumError):
    pass


class NotAQuorumColoringError(QuorumError):
    pass


# Solvers

class EmptyTreeError(QuorumError):
    pass


class NotPerLevelError(QuorumError):
    pass


class TrivialTreeError(QuorumError):
    pass


class NotBinaryError(QuorumError):
    pass


class NotAForestError(QuorumError):
    pass


class TooLargeError(QuorumError):
    pass


class ClosedFormOverflowError(QuorumError, OverflowError):
    pass


class InternalInvariantViolation(QuorumError):
    """A refinement step produced an invalid coloring; the trace so far is attached"""

    def __init__(self, message: str, trace: Optional[Any] = None):
        super().__init__(message)
        self.trace = trace


# Generators

class SizeOverflowError(QuorumError):
    pass


class RetriesExhaustedError(QuorumError):
    pass


class ShapeSpecError(QuorumError):
    pass


# Formats

class FormatSyntaxError(QuorumError):
    """Malformed input text, located by 1-based line and column"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class SemanticError(QuorumError):
    """Well-formed input that does not describe a valid structure"""


class NoExactMethodError(QuorumError):
    """No exact method applies; only the bound and brute force remain"""
