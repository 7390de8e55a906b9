"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TriangulationError(ValueError):
    """Base class for malformed rotation systems."""


class NotSimple(TriangulationError):
    pass


class NotSymmetric(TriangulationError):
    pass


class WrongEdgeCount(TriangulationError):
    pass


class NonTriangularFace(TriangulationError):
    pass


class Disconnected(TriangulationError):
    pass


class InducedCycleBroken(TriangulationError):
    pass


class InvalidSplit(ValueError):
    pass


class NotFlippable(ValueError):
    pass


class LimitExceeded(RuntimeError):
    """Requested size or class budget exceeds the configured maximum."""


class UnknownPredicateField(KeyError):
    pass


class FormatError(ValueError):
    """Base class for planar_code and graph6 problems."""


class BadHeader(FormatError):
    pass


class TruncatedRecord(FormatError):
    pass


class TooManyVertices(FormatError):
    pass


class ValidationFailed(FormatError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"graph #{index} is not a valid triangulation: {cause}")
        self.index = index
        self.cause = cause
